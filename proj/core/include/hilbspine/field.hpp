#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>
#include <vector>

#include "hilbspine/cpoly.hpp"

namespace hilbspine {

using Rational = boost::multiprecision::cpp_rational;

// Which exact field computations run over: the rationals, or GF(p) for a
// prime p (default 32003). Primality is validated.
struct FieldSpec {
  enum class Kind { Rationals, Prime };
  Kind kind = Kind::Prime;
  std::uint32_t p = 32003;

  static FieldSpec rationals() { return {Kind::Rationals, 0}; }
  static FieldSpec prime(std::uint32_t p);

  std::string name() const;  // "QQ" or "GF(32003)"
  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

// An exact field element: a rational or a residue mod p. Elements of
// different fields never mix (input_error). Division by zero throws.
class FieldScalar {
 public:
  FieldScalar() = default;  // rational 0
  static FieldScalar make(const FieldSpec& f, const BigInt& value);
  static FieldScalar rational(Rational v);

  const FieldSpec& field() const { return field_; }
  bool is_zero() const;

  FieldScalar operator+(const FieldScalar& o) const;
  FieldScalar operator-(const FieldScalar& o) const;
  FieldScalar operator*(const FieldScalar& o) const;
  FieldScalar operator/(const FieldScalar& o) const;
  FieldScalar operator-() const;
  FieldScalar inverse() const;
  FieldScalar pow(int e) const;

  friend bool operator==(const FieldScalar& a, const FieldScalar& b);

  std::string to_string() const;  // "3/4" or "17"

 private:
  FieldSpec field_ = FieldSpec::rationals();
  Rational q_ = 0;        // used when field_.kind == Rationals
  std::uint64_t r_ = 0;   // used when field_.kind == Prime

  void check_same(const FieldScalar& o) const;
};

// Evaluate p at a point (one value per variable of the universe).
FieldScalar evaluate(const CPolynomial& p, const std::vector<FieldScalar>& point,
                     const FieldSpec& f);

// Row rank of a dense matrix by Gaussian elimination (exact).
int matrix_rank(std::vector<std::vector<FieldScalar>> m);

// Pivot positions of the row space when columns are scanned in the given
// order (a permutation of 0..ncols-1): the column indices (in original
// numbering) at which reduced rows lead.
std::vector<int> pivot_columns(std::vector<std::vector<FieldScalar>> m,
                               const std::vector<int>& column_order);

}  // namespace hilbspine
