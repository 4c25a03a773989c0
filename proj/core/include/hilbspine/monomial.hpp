#pragma once

#include <optional>
#include <string>

namespace hilbspine {

// A monomial x^i y^j of the polynomial ring K[x,y]; exponents are >= 0.
struct Monomial {
  int i = 0;  // exponent of x
  int j = 0;  // exponent of y

  friend bool operator==(const Monomial&, const Monomial&) = default;
};

// The two lexicographic orders used throughout. lex_xy is the default order
// "<" with x < y (compare y-exponents first); lex_yx is its opposite, with
// y < x (compare x-exponents first).
inline bool lex_xy_less(const Monomial& a, const Monomial& b) {
  return a.j != b.j ? a.j < b.j : a.i < b.i;
}
inline bool lex_yx_less(const Monomial& a, const Monomial& b) {
  return a.i != b.i ? a.i < b.i : a.j < b.j;
}

struct LexXYLess {
  bool operator()(const Monomial& a, const Monomial& b) const { return lex_xy_less(a, b); }
};

enum class MonomialOrder {
  XBeforeY,  // x < y ("lex_xy")
  YBeforeX,  // y < x ("lex_yx")
};

inline bool order_less(MonomialOrder o, const Monomial& a, const Monomial& b) {
  return o == MonomialOrder::XBeforeY ? lex_xy_less(a, b) : lex_yx_less(a, b);
}

inline Monomial operator*(const Monomial& a, const Monomial& b) {
  return {a.i + b.i, a.j + b.j};
}
// Does a divide b?
inline bool divides(const Monomial& a, const Monomial& b) {
  return a.i <= b.i && a.j <= b.j;
}
inline Monomial lcm(const Monomial& a, const Monomial& b) {
  return {a.i > b.i ? a.i : b.i, a.j > b.j ? a.j : b.j};
}

// "x^i*y^j" with zero exponents omitted, "^1" omitted, and "1" for the unit.
std::string to_string(const Monomial& m);

// A positive coprime grading (a,b): deg(x^i y^j) = a*i + b*j. Constructor
// normalizes by the gcd and rejects nonpositive entries.
class Grading {
 public:
  Grading(int a, int b);

  int a() const { return a_; }
  int b() const { return b_; }
  bool is_standard() const { return a_ == 1 && b_ == 1; }

  int degree(const Monomial& m) const { return a_ * m.i + b_ * m.j; }

  // The slope monomial r = x^b / y^a moves along a fixed degree. shift(m, l)
  // is m * r^l = x^{i+l*b} y^{j-l*a}, or nullopt if an exponent goes negative.
  std::optional<Monomial> shift(const Monomial& m, int ell) const;

  // The integer l with m2 == m * r^l, if one exists.
  std::optional<int> shift_exponent(const Monomial& m, const Monomial& m2) const;

  friend bool operator==(const Grading&, const Grading&) = default;

 private:
  int a_;
  int b_;
};

std::string to_string(const Grading& g);

}  // namespace hilbspine
