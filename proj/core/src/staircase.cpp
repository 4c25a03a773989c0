#include "hilbspine/staircase.hpp"

#include <algorithm>
#include <numeric>

#include "hilbspine/errors.hpp"

namespace hilbspine {

MonomialIdeal::MonomialIdeal(std::vector<int> rows) : rows_(std::move(rows)) {
  if (rows_.empty()) throw input_error("partition must be nonempty");
  for (size_t j = 0; j < rows_.size(); ++j) {
    if (rows_[j] <= 0) throw input_error("partition entries must be positive");
    if (j > 0 && rows_[j] > rows_[j - 1])
      throw input_error("partition entries must be weakly decreasing");
  }
  // Minimal generators: x^{rows[0]}, then x^{rows[j]} y^j at every strict
  // descent rows[j] < rows[j-1], then y^{#rows}.
  gens_.push_back({rows_[0], 0});
  for (int j = 1; j < num_rows(); ++j)
    if (rows_[j] < rows_[j - 1]) gens_.push_back({rows_[j], j});
  gens_.push_back({0, num_rows()});
}

int MonomialIdeal::colength() const {
  return std::accumulate(rows_.begin(), rows_.end(), 0);
}

Monomial MonomialIdeal::w(int i) const {
  if (i < 1 || i > e()) throw input_error("w(i) requires 1 <= i <= e");
  return lcm(gens_[i], gens_[i - 1]);
}

int MonomialIdeal::j_plus(const Monomial& m) const {
  if (!contains(m)) throw input_error("j_plus: monomial " + to_string(m) + " is not in the ideal");
  for (int i = e(); i >= 0; --i)
    if (divides(gens_[i], m)) return i;
  throw std::logic_error("unreachable: ideal member not divisible by any generator");
}

int MonomialIdeal::j_minus(const Monomial& m) const {
  if (!contains(m)) throw input_error("j_minus: monomial " + to_string(m) + " is not in the ideal");
  for (int i = 0; i <= e(); ++i)
    if (divides(gens_[i], m)) return i;
  throw std::logic_error("unreachable: ideal member not divisible by any generator");
}

std::vector<Monomial> MonomialIdeal::staircase_monomials() const {
  std::vector<Monomial> out;
  out.reserve(colength());
  for (int j = 0; j < num_rows(); ++j)
    for (int i = 0; i < rows_[j]; ++i) out.push_back({i, j});
  std::sort(out.begin(), out.end(), LexXYLess{});
  return out;
}

MonomialIdeal MonomialIdeal::transpose() const {
  std::vector<int> cols(rows_[0], 0);
  for (int j = 0; j < num_rows(); ++j)
    for (int i = 0; i < rows_[j]; ++i) cols[i]++;
  return MonomialIdeal(std::move(cols));
}

std::string to_string(const MonomialIdeal& M) {
  std::string s;
  for (size_t k = 0; k < M.partition().size(); ++k) {
    if (k) s += ",";
    s += std::to_string(M.partition()[k]);
  }
  return s;
}

HilbertFunction graded_hilbert_function(const MonomialIdeal& M, const Grading& g) {
  std::vector<int> h;
  for (int j = 0; j < M.num_rows(); ++j)
    for (int i = 0; i < M.partition()[j]; ++i) {
      const int d = g.degree({i, j});
      if (d >= static_cast<int>(h.size())) h.resize(d + 1, 0);
      h[d]++;
    }
  return HilbertFunction(std::move(h));
}

std::vector<Monomial> monomials_of_degree(const Grading& g, int d) {
  std::vector<Monomial> out;
  if (d < 0) return out;
  for (int j = 0; g.b() * j <= d; ++j) {
    const int rem = d - g.b() * j;
    if (rem % g.a() == 0) out.push_back({rem / g.a(), j});
  }
  // Ascending y-exponent is ascending lex (x < y): same-degree monomials with
  // equal y-exponent coincide, because a*i is then determined.
  return out;
}

namespace {
void emit_partitions(int remaining, int cap, std::vector<int>& prefix,
                     std::vector<MonomialIdeal>& out) {
  if (remaining == 0) {
    out.push_back(MonomialIdeal(prefix));
    return;
  }
  for (int part = std::min(cap, remaining); part >= 1; --part) {
    prefix.push_back(part);
    emit_partitions(remaining - part, part, prefix, out);
    prefix.pop_back();
  }
}
}  // namespace

std::vector<MonomialIdeal> enumerate_ideals(int N) {
  if (N < 1) throw input_error("colength must be >= 1");
  std::vector<MonomialIdeal> out;
  std::vector<int> prefix;
  emit_partitions(N, N, prefix, out);
  return out;
}

std::vector<MonomialIdeal> ideals_with_hf(const HilbertFunction& h, const Grading& g) {
  std::vector<MonomialIdeal> out;
  const int N = h.total();
  if (N == 0) return out;
  for (auto& M : enumerate_ideals(N))
    if (graded_hilbert_function(M, g) == h) out.push_back(M);
  return out;
}

}  // namespace hilbspine
