#pragma once

#include <map>
#include <string>
#include <vector>

#include "hilbspine/cpoly.hpp"

namespace hilbspine {

// One generator f_i of the universal family: a staircase-indexed sum
// sum_l coeff_l * (m_i r^l) with coeff_0 = 1; stored as carrier -> coefficient.
using FamilyGenerator = std::map<Monomial, CPolynomial, LexXYLess>;

// The universal family over the Bialynicki-Birula cell of (M, g): generators
// f_0..f_e in Z[c_i^l][x,y], where the c_i^l run over the positive arrows.
struct UniversalFamily {
  MonomialIdeal ideal;
  Grading grading;
  VarTable vars;
  std::vector<FamilyGenerator> gens;  // f_0..f_e

  friend bool operator==(const UniversalFamily& a, const UniversalFamily& b) {
    return a.ideal == b.ideal && a.grading == b.grading && a.vars == b.vars && a.gens == b.gens;
  }
};

// Recursive construction: f_0 = m_0 and
// f_i = (m_i/m_{i-1}) f_{i-1}
//       + sum over arrows (i,l) of c_i^l (m_i r^l / m_{j^+(w_i r^l)}) f_{j^+(w_i r^l)},
// where the monomial factors may be Laurent but every product is polynomial.
UniversalFamily universal_generators(const MonomialIdeal& M, const Grading& g);

// Path-sum construction: f_i = sum over paths P from m_i of c_P * (m_i r^{l(P)}),
// computed by a memoized recursion on (generator index, remaining length).
UniversalFamily universal_generators_pathsum(const MonomialIdeal& M, const Grading& g);

// Memoized path-sum coefficients: sums(k, l) = sum of c_P over paths P from
// m_k with l(P) = l. Shared by the path-sum family and the Macaulay entry law.
class PathSums {
 public:
  PathSums(const MonomialIdeal& M, const Grading& g);

  const VarTable& vars() const { return vars_; }
  // Zero polynomial (no paths) when l is negative or exceeds the greedy cap.
  const CPolynomial& operator()(int k, int ell);

 private:
  const MonomialIdeal M_;
  const Grading g_;
  VarTable vars_;
  CPolynomial zero_;
  std::map<std::pair<int, int>, CPolynomial> memo_;
};

// "x^4*y^2 + (c(1,1)+c(2,1))*x^6*y + (c(2,1)*c(1,1)+c(2,2))*x^8":
// carriers descending in lex (leading generator first), coefficient
// polynomials parenthesized when they have more than one term.
std::string to_string(const FamilyGenerator& f, const VarTable& vars);

}  // namespace hilbspine
