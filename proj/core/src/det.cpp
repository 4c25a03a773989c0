#include "hilbspine/det.hpp"

#include <bit>

#include "hilbspine/errors.hpp"

namespace hilbspine {

namespace {
int universe_of(const PolyMatrix& A) {
  for (const auto& row : A)
    for (const auto& p : row)
      if (p.nvars() > 0) return p.nvars();
  return A.empty() ? 0 : A[0].empty() ? 0 : A[0][0].nvars();
}

void check_square(const PolyMatrix& A) {
  for (const auto& row : A)
    if (row.size() != A.size()) throw input_error("determinant requires a square matrix");
}
}  // namespace

CPolynomial det_bareiss(PolyMatrix A) {
  check_square(A);
  const int n = static_cast<int>(A.size());
  const int nvars = universe_of(A);
  if (n == 0) return CPolynomial::constant(nvars, 1);

  int sign = 1;
  CPolynomial prev = CPolynomial::constant(nvars, 1);  // previous pivot
  for (int k = 0; k < n - 1; ++k) {
    if (A[k][k].is_zero()) {
      int swap_row = -1;
      for (int r = k + 1; r < n; ++r)
        if (!A[r][k].is_zero()) {
          swap_row = r;
          break;
        }
      if (swap_row < 0) return CPolynomial(nvars);  // zero column below: det = 0
      std::swap(A[k], A[swap_row]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        // Sylvester's identity guarantees the division is exact.
        A[i][j] = (A[i][j] * A[k][k] - A[i][k] * A[k][j]).divide_exact(prev);
    prev = A[k][k];
  }
  CPolynomial d = A[n - 1][n - 1];
  if (sign < 0) d = -d;
  return d;
}

MinorExpander::MinorExpander(const PolyMatrix& A) : nvars_(universe_of(A)), entries_(A) {
  if (entries_.size() > 63) throw guard_error("MinorExpander: more than 63 rows");
}

const CPolynomial& MinorExpander::det_mask(std::uint64_t mask) {
  const auto it = memo_.find(mask);
  if (it != memo_.end()) return it->second;

  CPolynomial d(nvars_);
  const int k = std::popcount(mask);  // expand along column k-1
  if (mask == 0) {
    d = CPolynomial::constant(nvars_, 1);
  } else {
    int parity = 0;  // position of the removed row within the subset
    for (std::uint64_t rest = mask; rest; rest &= rest - 1, ++parity) {
      const int row = std::countr_zero(rest);
      const CPolynomial& entry = entries_[row][k - 1];
      if (entry.is_zero()) continue;
      CPolynomial term = entry * det_mask(mask & ~(std::uint64_t{1} << row));
      // Sign of expanding entry (row position `parity`, last column k-1).
      if ((parity + k - 1) % 2 != 0) term = -term;
      d += term;
    }
  }
  return memo_.emplace(mask, std::move(d)).first->second;
}

const CPolynomial& MinorExpander::det(const std::vector<int>& rows) {
  std::uint64_t mask = 0;
  for (int r : rows) {
    if (r < 0 || r >= static_cast<int>(entries_.size()))
      throw input_error("MinorExpander: row index out of range");
    mask |= std::uint64_t{1} << r;
  }
  if (std::popcount(mask) != static_cast<int>(rows.size()))
    throw input_error("MinorExpander: repeated row index");
  if (!entries_.empty() && rows.size() > entries_[0].size())
    throw input_error("MinorExpander: more rows than available columns");
  return det_mask(mask);
}

CPolynomial determinant(const PolyMatrix& A, int max_n) {
  check_square(A);
  const int n = static_cast<int>(A.size());
  if (n > max_n)
    throw guard_error("determinant: size " + std::to_string(n) + " exceeds the cap " +
                      std::to_string(max_n));
  if (n <= 8) {
    MinorExpander ex(A);
    std::vector<int> rows(n);
    for (int k = 0; k < n; ++k) rows[k] = k;
    return ex.det(rows);
  }
  return det_bareiss(A);
}

}  // namespace hilbspine
