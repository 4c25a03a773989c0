#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "hilbspine/cpoly.hpp"

namespace hilbspine {

using PolyMatrix = std::vector<std::vector<CPolynomial>>;

// Determinant of a square polynomial matrix. Dispatches between the two
// backends below; max_n caps the size (guard_error beyond it, default 16).
CPolynomial determinant(const PolyMatrix& A, int max_n = 16);

// Fraction-free Bareiss elimination with exact polynomial division; row
// pivoting with sign tracking. Best for a single larger determinant.
CPolynomial det_bareiss(PolyMatrix A);

// Laplace expansion along columns, memoizing subdeterminants by row-subset
// bitmask. det of (rows in `mask`, first popcount(mask) columns of `cols`).
// One memo shared across all maximal minors of the same matrix makes the
// all-minors sweep nearly free of repeated work.
class MinorExpander {
 public:
  // cols: the full list of column vectors, indexed [col][row].
  MinorExpander(const PolyMatrix& A);

  // Determinant of the square submatrix on the given rows (ascending) and
  // the first |rows| columns.
  const CPolynomial& det(const std::vector<int>& rows);

 private:
  const CPolynomial& det_mask(std::uint64_t mask);

  int nvars_ = 0;
  std::vector<std::vector<CPolynomial>> entries_;  // [row][col]
  std::map<std::uint64_t, CPolynomial> memo_;
};

}  // namespace hilbspine
