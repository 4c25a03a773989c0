#include "hilbspine/cpoly.hpp"

#include <algorithm>

#include "hilbspine/errors.hpp"

namespace hilbspine {

VarTable::VarTable(std::vector<Arrow> arrows) : arrows_(std::move(arrows)) {
  for (size_t k = 1; k < arrows_.size(); ++k)
    if (!(arrows_[k - 1] < arrows_[k]))
      throw input_error("VarTable arrows must be strictly ascending in (i,l)");
}

VarTable VarTable::for_ideal(const MonomialIdeal& M, const Grading& g) {
  return VarTable(positive_arrows(M, g));
}

std::optional<int> VarTable::index_of(const Arrow& a) const {
  const auto it = std::lower_bound(arrows_.begin(), arrows_.end(), a);
  if (it == arrows_.end() || !(*it == a)) return std::nullopt;
  return static_cast<int>(it - arrows_.begin());
}

std::string VarTable::name(int v) const {
  const Arrow& a = arrows_[v];
  return "c(" + std::to_string(a.index) + "," + std::to_string(a.length) + ")";
}

CPolynomial CPolynomial::constant(int nvars, BigInt c) {
  CPolynomial p(nvars);
  if (c != 0) p.terms_.emplace(std::vector<int>(nvars, 0), std::move(c));
  return p;
}

CPolynomial CPolynomial::variable(int nvars, int v, int exp) {
  if (v < 0 || v >= nvars) throw input_error("CPolynomial::variable: index out of range");
  CPolynomial p(nvars);
  std::vector<int> e(nvars, 0);
  e[v] = exp;
  p.terms_.emplace(std::move(e), 1);
  return p;
}

CPolynomial CPolynomial::term(int nvars, std::vector<int> expvec, BigInt c) {
  if (static_cast<int>(expvec.size()) != nvars)
    throw input_error("CPolynomial::term: exponent vector size mismatch");
  CPolynomial p(nvars);
  if (c != 0) p.terms_.emplace(std::move(expvec), std::move(c));
  return p;
}

bool CPolynomial::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  const auto& e = terms_.begin()->first;
  return std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
}

BigInt CPolynomial::coefficient_of(const std::vector<int>& expvec) const {
  const auto it = terms_.find(expvec);
  return it == terms_.end() ? BigInt(0) : it->second;
}

const std::vector<int>& CPolynomial::leading_exponents() const {
  if (terms_.empty()) throw input_error("leading term of the zero polynomial");
  return terms_.rbegin()->first;
}

const BigInt& CPolynomial::leading_coefficient() const {
  if (terms_.empty()) throw input_error("leading term of the zero polynomial");
  return terms_.rbegin()->second;
}

void CPolynomial::add_term(const std::vector<int>& expvec, const BigInt& c) {
  if (c == 0) return;
  const auto [it, fresh] = terms_.try_emplace(expvec, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

CPolynomial& CPolynomial::operator+=(const CPolynomial& o) {
  if (nvars_ != o.nvars_) throw input_error("polynomial universes differ");
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

CPolynomial& CPolynomial::operator-=(const CPolynomial& o) {
  if (nvars_ != o.nvars_) throw input_error("polynomial universes differ");
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

CPolynomial operator*(const CPolynomial& a, const CPolynomial& b) {
  if (a.nvars_ != b.nvars_) throw input_error("polynomial universes differ");
  CPolynomial out(a.nvars_);
  std::vector<int> e(a.nvars_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      for (int k = 0; k < a.nvars_; ++k) e[k] = ea[k] + eb[k];
      out.add_term(e, ca * cb);
    }
  return out;
}

CPolynomial CPolynomial::operator-() const {
  CPolynomial out(nvars_);
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
  return out;
}

CPolynomial& CPolynomial::operator*=(const BigInt& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, coef] : terms_) coef *= c;
  return *this;
}

std::optional<int> CPolynomial::weighted_degree(const std::vector<int>& weights) const {
  if (static_cast<int>(weights.size()) != nvars_)
    throw input_error("weighted_degree: weight vector size mismatch");
  std::optional<int> deg;
  for (const auto& [e, c] : terms_) {
    int d = 0;
    for (int k = 0; k < nvars_; ++k) d += e[k] * weights[k];
    if (!deg)
      deg = d;
    else if (*deg != d)
      return std::nullopt;
  }
  return deg;  // nullopt for the zero polynomial
}

CPolynomial CPolynomial::divide_exact(const CPolynomial& q) const {
  if (q.is_zero()) throw input_error("divide_exact: division by zero");
  CPolynomial rem = *this;
  CPolynomial quot(nvars_);
  const auto& qe = q.leading_exponents();
  const auto& qc = q.leading_coefficient();
  while (!rem.is_zero()) {
    // Exact division means lt(rem) is divisible by lt(q) at every step.
    const auto& re = rem.leading_exponents();
    const auto& rc = rem.leading_coefficient();
    std::vector<int> te(nvars_);
    for (int k = 0; k < nvars_; ++k) {
      te[k] = re[k] - qe[k];
      if (te[k] < 0) throw input_error("divide_exact: not an exact division (monomial)");
    }
    if (rc % qc != 0) throw input_error("divide_exact: not an exact division (coefficient)");
    CPolynomial t(nvars_);
    t.terms_.emplace(std::move(te), rc / qc);
    quot += t;
    rem -= t * q;
  }
  return quot;
}

std::string monomial_text(const std::vector<int>& expvec, const VarTable& vars) {
  std::string mono;
  for (int k = static_cast<int>(expvec.size()) - 1; k >= 0; --k) {  // descending significance
    if (expvec[k] == 0) continue;
    if (!mono.empty()) mono += "*";
    mono += vars.name(k);
    if (expvec[k] > 1) mono += "^" + std::to_string(expvec[k]);
  }
  return mono.empty() ? "1" : mono;
}

std::string CPolynomial::to_string(const VarTable& vars) const {
  if (vars.size() != nvars_) throw input_error("to_string: variable table size mismatch");
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [e, c] : terms_) {
    const std::string mono = monomial_text(e, vars);
    std::string term;
    if (mono == "1") {
      term = c.str();
    } else if (c == 1) {
      term = mono;
    } else if (c == -1) {
      term = "-" + mono;
    } else {
      term = c.str() + "*" + mono;
    }
    if (!s.empty() && term[0] != '-') s += "+";
    s += term;
  }
  return s;
}

}  // namespace hilbspine
