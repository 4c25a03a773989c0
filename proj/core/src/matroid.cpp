#include "hilbspine/matroid.hpp"

#include <algorithm>
#include <bit>

#include "hilbspine/errors.hpp"

namespace hilbspine {

namespace {
std::uint64_t binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t c = 1;
  for (int t = 1; t <= k; ++t) c = c * static_cast<std::uint64_t>(n - k + t) / t;
  return c;
}
}  // namespace

Matroid::Matroid(std::vector<Monomial> ground, const std::function<bool(std::uint32_t)>& oracle)
    : ground_(std::move(ground)) {
  const int n = size();
  if (n > 20)
    throw guard_error("Matroid: ground set of " + std::to_string(n) +
                      " monomials exceeds the enumeration cap 20");
  // independent[mask] for every subset; 2^n stays small under the cap.
  std::vector<bool> independent(std::size_t{1} << n);
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
    independent[mask] = oracle(mask);
    if (independent[mask]) rank_ = std::max(rank_, std::popcount(mask));
  }
  if (!independent[0]) throw input_error("Matroid: the empty set must be independent");

  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
    if (std::popcount(mask) == rank_ && independent[mask]) bases_.push_back(mask);
    // A circuit is dependent with every maximal proper subset independent.
    if (!independent[mask]) {
      bool minimal = true;
      for (std::uint32_t rest = mask; rest && minimal; rest &= rest - 1)
        minimal = independent[mask & ~(rest & -rest)];
      if (minimal) circuits_.push_back(mask);
    }
  }
}

bool Matroid::is_basis(std::uint32_t mask) const {
  return std::binary_search(bases_.begin(), bases_.end(), mask);
}

bool Matroid::is_uniform() const {
  return static_cast<std::uint64_t>(bases_.size()) == binom(size(), rank_);
}

std::vector<Monomial> Matroid::loops() const {
  std::uint32_t in_some = 0;
  for (std::uint32_t b : bases_) in_some |= b;
  std::vector<Monomial> out;
  for (int k = 0; k < size(); ++k)
    if (!(in_some & (std::uint32_t{1} << k))) out.push_back(ground_[k]);
  return out;
}

std::vector<Monomial> Matroid::coloops() const {
  std::uint32_t in_all = bases_.empty() ? 0 : ~std::uint32_t{0};
  for (std::uint32_t b : bases_) in_all &= b;
  std::vector<Monomial> out;
  for (int k = 0; k < size(); ++k)
    if (in_all & (std::uint32_t{1} << k)) out.push_back(ground_[k]);
  return out;
}

}  // namespace hilbspine
