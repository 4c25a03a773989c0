#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "hilbspine/monomial.hpp"

namespace hilbspine {

// A matroid on a ground set of monomials, built from an independence oracle
// and stored explicitly (bases as bitmasks over the ground order). Ground
// sets are small (degree slices); construction is guarded.
class Matroid {
 public:
  // oracle(mask) must say whether the subset is independent, and must be
  // monotone (subsets of independent sets independent).
  Matroid(std::vector<Monomial> ground, const std::function<bool(std::uint32_t)>& oracle);

  const std::vector<Monomial>& ground() const { return ground_; }
  int size() const { return static_cast<int>(ground_.size()); }
  int rank() const { return rank_; }
  const std::vector<std::uint32_t>& bases() const { return bases_; }
  const std::vector<std::uint32_t>& circuits() const { return circuits_; }

  bool is_basis(std::uint32_t mask) const;
  // Uniform U_{r,n}: every r-subset is a basis.
  bool is_uniform() const;
  std::vector<Monomial> loops() const;    // elements of no basis
  std::vector<Monomial> coloops() const;  // elements of every basis

  friend bool operator==(const Matroid& a, const Matroid& b) {
    return a.ground_ == b.ground_ && a.bases_ == b.bases_;
  }

 private:
  std::vector<Monomial> ground_;
  int rank_ = 0;
  std::vector<std::uint32_t> bases_;    // ascending as integers
  std::vector<std::uint32_t> circuits_; // minimal dependent sets, ascending
};

}  // namespace hilbspine
