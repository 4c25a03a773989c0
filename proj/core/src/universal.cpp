#include "hilbspine/universal.hpp"

#include "hilbspine/errors.hpp"

namespace hilbspine {

namespace {
// Multiply every carrier of f by the Laurent monomial x^di y^dj; each
// resulting carrier must be a genuine monomial.
FamilyGenerator laurent_shift(const FamilyGenerator& f, int di, int dj) {
  FamilyGenerator out;
  for (const auto& [m, c] : f) {
    const Monomial shifted{m.i + di, m.j + dj};
    if (shifted.i < 0 || shifted.j < 0)
      throw std::logic_error("universal family: carrier left the polynomial ring");
    out.emplace(shifted, c);
  }
  return out;
}

void add_scaled(FamilyGenerator& into, const FamilyGenerator& f, const CPolynomial& scale) {
  for (const auto& [m, c] : f) {
    auto [it, fresh] = into.try_emplace(m, c * scale);
    if (!fresh) it->second += c * scale;
    if (it->second.is_zero()) into.erase(it);
  }
}
}  // namespace

UniversalFamily universal_generators(const MonomialIdeal& M, const Grading& g) {
  UniversalFamily F{M, g, VarTable::for_ideal(M, g), {}};
  const int nvars = F.vars.size();
  const auto& gens = M.generators();

  F.gens.resize(gens.size());
  F.gens[0].emplace(gens[0], CPolynomial::constant(nvars, 1));
  for (int i = 1; i <= M.e(); ++i) {
    FamilyGenerator fi =
        laurent_shift(F.gens[i - 1], gens[i].i - gens[i - 1].i, gens[i].j - gens[i - 1].j);
    for (int v = 0; v < nvars; ++v) {
      const Arrow& arr = F.vars.arrow(v);
      if (arr.index != i) continue;
      const Monomial target = *g.shift(gens[i], arr.length);          // m_i r^l
      const int jp = M.j_plus(*g.shift(M.w(i), arr.length));          // j^+(w_i r^l)
      const Monomial& mjp = gens[jp];
      FamilyGenerator shifted = laurent_shift(F.gens[jp], target.i - mjp.i, target.j - mjp.j);
      add_scaled(fi, shifted, CPolynomial::variable(nvars, v));
    }
    F.gens[i] = std::move(fi);
  }
  return F;
}

PathSums::PathSums(const MonomialIdeal& M, const Grading& g)
    : M_(M), g_(g), vars_(VarTable::for_ideal(M, g)), zero_(vars_.size()) {}

const CPolynomial& PathSums::operator()(int k, int ell) {
  if (ell < 0) return zero_;
  if (ell == 0) {
    // The empty path: c_P = 1.
    const auto it = memo_.find({k, 0});
    if (it != memo_.end()) return it->second;
    return memo_.emplace(std::make_pair(k, 0), CPolynomial::constant(vars_.size(), 1))
        .first->second;
  }
  const auto it = memo_.find({k, ell});
  if (it != memo_.end()) return it->second;

  CPolynomial sum(vars_.size());
  // First arrow (i1,l1) with i1 <= k, l1 <= ell; tail is a path from
  // m_{j^+(w_{i1} r^{l1})} of length ell - l1.
  for (int v = 0; v < vars_.size(); ++v) {
    const Arrow& a = vars_.arrow(v);
    if (a.index > k || a.length > ell) continue;
    const int jp = M_.j_plus(*g_.shift(M_.w(a.index), a.length));
    const CPolynomial& tail = (*this)(jp, ell - a.length);
    if (tail.is_zero()) continue;
    sum += CPolynomial::variable(vars_.size(), v) * tail;
  }
  return memo_.emplace(std::make_pair(k, ell), std::move(sum)).first->second;
}

UniversalFamily universal_generators_pathsum(const MonomialIdeal& M, const Grading& g) {
  PathSums sums(M, g);
  UniversalFamily F{M, g, sums.vars(), {}};
  const auto& gens = M.generators();
  F.gens.resize(gens.size());
  for (int i = 0; i <= M.e(); ++i) {
    // Carriers m_i r^l stay valid monomials for l up to y-exponent/a, which
    // also bounds every path length from m_i.
    for (int ell = 0; ell * g.a() <= gens[i].j; ++ell) {
      const CPolynomial& c = sums(i, ell);
      if (c.is_zero()) continue;
      F.gens[i].emplace(*g.shift(gens[i], ell), c);
    }
  }
  return F;
}

std::string to_string(const FamilyGenerator& f, const VarTable& vars) {
  if (f.empty()) return "0";
  std::string s;
  // Descending lex: the leading carrier (the generator itself) first.
  for (auto it = f.rbegin(); it != f.rend(); ++it) {
    const auto& [m, c] = *it;
    if (!s.empty()) s += " + ";
    if (c.is_constant() && c.coefficient_of(std::vector<int>(c.nvars(), 0)) == 1) {
      s += to_string(m);
    } else if (c.num_terms() == 1) {
      s += c.to_string(vars) + "*" + to_string(m);
    } else {
      s += "(" + c.to_string(vars) + ")*" + to_string(m);
    }
  }
  return s;
}

}  // namespace hilbspine
