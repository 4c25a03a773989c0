#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hilbspine/arrows.hpp"

namespace hilbspine {

using BigInt = boost::multiprecision::cpp_int;

// The variables c_i^l of one universal family: the positive arrows of (M,g),
// sorted ascending by (i,l). Index order is significance order for the
// variable order c_i^l > c_j^l' iff i > j or (i = j and l > l'): the highest
// index is the most significant variable. weight(v) = l is the arrow length,
// used for the weighted grading deg(c_i^l) = l.
class VarTable {
 public:
  VarTable() = default;
  explicit VarTable(std::vector<Arrow> arrows);
  static VarTable for_ideal(const MonomialIdeal& M, const Grading& g);

  int size() const { return static_cast<int>(arrows_.size()); }
  const Arrow& arrow(int v) const { return arrows_[v]; }
  int weight(int v) const { return arrows_[v].length; }
  std::optional<int> index_of(const Arrow& a) const;
  std::string name(int v) const;  // "c(i,l)"

  friend bool operator==(const VarTable&, const VarTable&) = default;

 private:
  std::vector<Arrow> arrows_;
};

// Exponent vectors compared lexicographically with the *highest* index most
// significant, so that ascending map order is ascending variable-lex.
struct VarLexLess {
  bool operator()(const std::vector<int>& a, const std::vector<int>& b) const {
    for (size_t k = a.size(); k-- > 0;)
      if (a[k] != b[k]) return a[k] < b[k];
    return false;
  }
};

// A sparse polynomial with exact integer coefficients in the arrow variables
// of a fixed universe of nvars variables. Terms are kept in ascending
// variable-lex order with nonzero coefficients.
class CPolynomial {
 public:
  CPolynomial() = default;  // the zero polynomial of a 0-variable universe
  explicit CPolynomial(int nvars) : nvars_(nvars) {}

  static CPolynomial constant(int nvars, BigInt c);
  static CPolynomial variable(int nvars, int v, int exp = 1);
  static CPolynomial term(int nvars, std::vector<int> expvec, BigInt c);

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  int num_terms() const { return static_cast<int>(terms_.size()); }
  const std::map<std::vector<int>, BigInt, VarLexLess>& terms() const { return terms_; }

  // Coefficient of the given exponent vector (0 if absent).
  BigInt coefficient_of(const std::vector<int>& expvec) const;
  // Exponent vector of the variable-lex-leading (largest) term.
  const std::vector<int>& leading_exponents() const;
  const BigInt& leading_coefficient() const;

  CPolynomial& operator+=(const CPolynomial& o);
  CPolynomial& operator-=(const CPolynomial& o);
  friend CPolynomial operator+(CPolynomial a, const CPolynomial& b) { return a += b; }
  friend CPolynomial operator-(CPolynomial a, const CPolynomial& b) { return a -= b; }
  friend CPolynomial operator*(const CPolynomial& a, const CPolynomial& b);
  CPolynomial operator-() const;
  CPolynomial& operator*=(const BigInt& c);

  friend bool operator==(const CPolynomial& a, const CPolynomial& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

  // Common weighted degree of all terms under per-variable weights, or
  // nullopt if the polynomial is 0 or inhomogeneous.
  std::optional<int> weighted_degree(const std::vector<int>& weights) const;

  // Exact division: requires q != 0 and q | this (throws otherwise).
  CPolynomial divide_exact(const CPolynomial& q) const;

  // Canonical text: terms ascending in variable-lex, each term's variables
  // descending in significance; "0" for zero. E.g. "c(2,1)*c(1,1)+c(2,2)".
  std::string to_string(const VarTable& vars) const;

 private:
  void add_term(const std::vector<int>& expvec, const BigInt& c);

  int nvars_ = 0;
  std::map<std::vector<int>, BigInt, VarLexLess> terms_;
};

// Text of a single variable-monomial, variables in descending significance:
// "c(3,1)*c(2,1)^2", or "1" for the empty monomial.
std::string monomial_text(const std::vector<int>& expvec, const VarTable& vars);

}  // namespace hilbspine
