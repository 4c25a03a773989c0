#pragma once

#include <string>
#include <vector>

#include "hilbspine/hilbert.hpp"
#include "hilbspine/monomial.hpp"

namespace hilbspine {

// A monomial ideal M of finite colength in K[x,y], encoded by its staircase
// partition: rows[j] = number of monomials with y-exponent j lying *outside*
// M. rows is weakly decreasing and strictly positive; x^i y^j lies in M iff
// j >= #rows or i >= rows[j].
//
// The minimal generators m_0 < m_1 < ... < m_e (lex order with x < y) have
// strictly increasing y-exponents and strictly decreasing x-exponents;
// m_0 = x^{rows[0]} and m_e = y^{#rows}.
class MonomialIdeal {
 public:
  explicit MonomialIdeal(std::vector<int> rows);

  const std::vector<int>& partition() const { return rows_; }
  int colength() const;
  int num_rows() const { return static_cast<int>(rows_.size()); }

  bool contains(const Monomial& m) const {
    return m.j >= num_rows() || m.i >= rows_[m.j];
  }

  // Minimal generators m_0..m_e, increasing in lex (x < y).
  const std::vector<Monomial>& generators() const { return gens_; }
  int e() const { return static_cast<int>(gens_.size()) - 1; }

  // w_i = lcm(m_i, m_{i-1}) for 1 <= i <= e.
  Monomial w(int i) const;

  // Largest / smallest index i with m_i | m. Requires m in M.
  int j_plus(const Monomial& m) const;
  int j_minus(const Monomial& m) const;

  // Monomials outside M ("the staircase"), increasing in lex (x < y).
  std::vector<Monomial> staircase_monomials() const;

  // The ideal with the conjugate partition (x and y swapped).
  MonomialIdeal transpose() const;

  friend bool operator==(const MonomialIdeal& a, const MonomialIdeal& b) {
    return a.rows_ == b.rows_;
  }
  friend bool operator<(const MonomialIdeal& a, const MonomialIdeal& b) {
    return a.rows_ < b.rows_;
  }

 private:
  std::vector<int> rows_;
  std::vector<Monomial> gens_;
};

// "6,4,2,1"
std::string to_string(const MonomialIdeal& M);

// Hilbert function of S/M under g: h(d) = #{staircase monomials of degree d}.
HilbertFunction graded_hilbert_function(const MonomialIdeal& M, const Grading& g);

// All monomials of g-degree d, increasing in lex (x < y). Empty when no
// exponent pair hits d.
std::vector<Monomial> monomials_of_degree(const Grading& g, int d);

// All monomial ideals of colength N, i.e. partitions of N, in descending
// lexicographic order ([N] first, [1,...,1] last). Requires N >= 1.
std::vector<MonomialIdeal> enumerate_ideals(int N);

// The fiber: ideals of colength total(h) whose g-graded Hilbert function
// equals h. May be empty. Order inherited from enumerate_ideals.
std::vector<MonomialIdeal> ideals_with_hf(const HilbertFunction& h, const Grading& g);

}  // namespace hilbspine
