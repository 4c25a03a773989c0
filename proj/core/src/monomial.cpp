#include "hilbspine/monomial.hpp"

#include <numeric>

#include "hilbspine/errors.hpp"

namespace hilbspine {

std::string to_string(const Monomial& m) {
  if (m.i == 0 && m.j == 0) return "1";
  std::string s;
  if (m.i > 0) {
    s += "x";
    if (m.i > 1) s += "^" + std::to_string(m.i);
  }
  if (m.j > 0) {
    if (!s.empty()) s += "*";
    s += "y";
    if (m.j > 1) s += "^" + std::to_string(m.j);
  }
  return s;
}

Grading::Grading(int a, int b) {
  if (a <= 0 || b <= 0)
    throw input_error("grading entries must be positive, got (" + std::to_string(a) + "," +
                      std::to_string(b) + ")");
  const int g = std::gcd(a, b);
  a_ = a / g;
  b_ = b / g;
}

std::optional<Monomial> Grading::shift(const Monomial& m, int ell) const {
  const int i = m.i + ell * b_;
  const int j = m.j - ell * a_;
  if (i < 0 || j < 0) return std::nullopt;
  return Monomial{i, j};
}

std::optional<int> Grading::shift_exponent(const Monomial& m, const Monomial& m2) const {
  const int dj = m.j - m2.j;  // = l * a
  if (dj % a_ != 0) return std::nullopt;
  const int ell = dj / a_;
  if (m.i + ell * b_ != m2.i) return std::nullopt;
  return ell;
}

std::string to_string(const Grading& g) {
  return "(" + std::to_string(g.a()) + "," + std::to_string(g.b()) + ")";
}

}  // namespace hilbspine
