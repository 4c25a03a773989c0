#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hilbspine/staircase.hpp"

namespace hilbspine {

// An arrow (i, l): generator index i, shift length l along the slope
// monomial r of the grading. Positive arrows have l >= 1, negative l <= -1.
struct Arrow {
  int index = 0;
  int length = 0;

  friend bool operator==(const Arrow&, const Arrow&) = default;
  friend bool operator<(const Arrow& a, const Arrow& b) {
    return a.index != b.index ? a.index < b.index : a.length < b.length;
  }
};

std::string to_string(const Arrow& a);
std::string to_string(const std::vector<Arrow>& arrows);  // "{(1,1),(2,1)}"

// T+(M): arrows (i,l), 1 <= i <= e, l >= 1, with m_i r^l outside M and
// w_i r^l inside M. Sorted ascending by (i,l).
std::vector<Arrow> positive_arrows(const MonomialIdeal& M, const Grading& g);

// T-(M): arrows (i,l), 0 <= i <= e-1, l <= -1, with m_i r^l a valid monomial
// outside M and w_{i+1} r^l inside M. Sorted ascending by (i,l).
std::vector<Arrow> negative_arrows(const MonomialIdeal& M, const Grading& g);

// A composable chain of positive arrows starting from generator m_k: the
// first arrow (i1,l1) has i1 <= k, and the rest form a path from
// m_{j^+(w_{i1} r^{l1})}. The empty path (length 0) is a path from any m_k.
struct Path {
  std::vector<Arrow> steps;

  int length() const;
  friend bool operator==(const Path&, const Path&) = default;
};

std::string to_string(const Path& p);  // "((3,1),(2,1))", "()" for empty

// All paths from m_k of total length exactly ell, k >= 0, ell >= 0.
// Deterministic order: first arrow descending in (i,l), then recursively.
std::vector<Path> paths_from(const MonomialIdeal& M, const Grading& g, int k, int ell);

// The direct path p_{k,ell}, if it exists: greedy longest-arrow chain
// z_1, z_2, ... (z at index i uses the longest positive arrow there; indices
// strictly decrease), truncated to total length ell, allowing one final
// shorter arrow. At most one per (k, ell); p_{k,0} is the empty path.
std::optional<Path> direct_path(const MonomialIdeal& M, const Grading& g, int k, int ell);

}  // namespace hilbspine
