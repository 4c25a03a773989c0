#include "hilbspine/field.hpp"

#include <utility>

#include "hilbspine/errors.hpp"

namespace hilbspine {

FieldSpec FieldSpec::prime(std::uint32_t p) {
  if (p < 2) throw input_error("field characteristic must be a prime >= 2");
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) throw input_error(std::to_string(p) + " is not prime");
  return {Kind::Prime, p};
}

std::string FieldSpec::name() const {
  return kind == Kind::Rationals ? "QQ" : "GF(" + std::to_string(p) + ")";
}

FieldScalar FieldScalar::make(const FieldSpec& f, const BigInt& value) {
  FieldScalar s;
  s.field_ = f;
  if (f.kind == FieldSpec::Kind::Rationals) {
    s.q_ = Rational(value);
  } else {
    BigInt r = value % f.p;
    if (r < 0) r += f.p;
    s.r_ = static_cast<std::uint64_t>(r);
  }
  return s;
}

FieldScalar FieldScalar::rational(Rational v) {
  FieldScalar s;
  s.field_ = FieldSpec::rationals();
  s.q_ = std::move(v);
  return s;
}

bool FieldScalar::is_zero() const {
  return field_.kind == FieldSpec::Kind::Rationals ? q_ == 0 : r_ == 0;
}

void FieldScalar::check_same(const FieldScalar& o) const {
  if (!(field_ == o.field_)) throw input_error("field scalars from different fields");
}

FieldScalar FieldScalar::operator+(const FieldScalar& o) const {
  check_same(o);
  FieldScalar s = *this;
  if (field_.kind == FieldSpec::Kind::Rationals)
    s.q_ += o.q_;
  else
    s.r_ = (r_ + o.r_) % field_.p;
  return s;
}

FieldScalar FieldScalar::operator-(const FieldScalar& o) const { return *this + (-o); }

FieldScalar FieldScalar::operator*(const FieldScalar& o) const {
  check_same(o);
  FieldScalar s = *this;
  if (field_.kind == FieldSpec::Kind::Rationals)
    s.q_ *= o.q_;
  else
    s.r_ = (r_ * o.r_) % field_.p;  // p < 2^32, so the product fits in 64 bits
  return s;
}

FieldScalar FieldScalar::operator/(const FieldScalar& o) const { return *this * o.inverse(); }

FieldScalar FieldScalar::operator-() const {
  FieldScalar s = *this;
  if (field_.kind == FieldSpec::Kind::Rationals)
    s.q_ = -q_;
  else
    s.r_ = r_ == 0 ? 0 : field_.p - r_;
  return s;
}

FieldScalar FieldScalar::inverse() const {
  if (is_zero()) throw input_error("division by zero in field arithmetic");
  FieldScalar s = *this;
  if (field_.kind == FieldSpec::Kind::Rationals) {
    s.q_ = 1 / q_;
    return s;
  }
  // Extended Euclid for r_^{-1} mod p.
  std::int64_t t = 0, nt = 1, r = field_.p, nr = static_cast<std::int64_t>(r_);
  while (nr != 0) {
    const std::int64_t quot = r / nr;
    t = std::exchange(nt, t - quot * nt);
    r = std::exchange(nr, r - quot * nr);
  }
  s.r_ = static_cast<std::uint64_t>(t < 0 ? t + field_.p : t);
  return s;
}

FieldScalar FieldScalar::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  FieldScalar acc = make(field_, 1);
  FieldScalar base = *this;
  while (e > 0) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

bool operator==(const FieldScalar& a, const FieldScalar& b) {
  a.check_same(b);
  return a.field_.kind == FieldSpec::Kind::Rationals ? a.q_ == b.q_ : a.r_ == b.r_;
}

std::string FieldScalar::to_string() const {
  if (field_.kind == FieldSpec::Kind::Prime) return std::to_string(r_);
  const auto& num = boost::multiprecision::numerator(q_);
  const auto& den = boost::multiprecision::denominator(q_);
  return den == 1 ? num.str() : num.str() + "/" + den.str();
}

FieldScalar evaluate(const CPolynomial& p, const std::vector<FieldScalar>& point,
                     const FieldSpec& f) {
  if (static_cast<int>(point.size()) != p.nvars())
    throw input_error("evaluate: point does not assign every variable");
  FieldScalar acc = FieldScalar::make(f, 0);
  for (const auto& [e, c] : p.terms()) {
    FieldScalar t = FieldScalar::make(f, c);
    for (int k = 0; k < p.nvars(); ++k)
      if (e[k] != 0) t = t * point[k].pow(e[k]);
    acc = acc + t;
  }
  return acc;
}

int matrix_rank(std::vector<std::vector<FieldScalar>> m) {
  if (m.empty()) return 0;
  const int rows = static_cast<int>(m.size());
  const int cols = static_cast<int>(m[0].size());
  int rank = 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r)
      if (!m[r][c].is_zero()) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    std::swap(m[rank], m[pivot]);
    const FieldScalar inv = m[rank][c].inverse();
    for (int r = rank + 1; r < rows; ++r) {
      if (m[r][c].is_zero()) continue;
      const FieldScalar f = m[r][c] * inv;
      for (int k = c; k < cols; ++k) m[r][k] = m[r][k] - f * m[rank][k];
    }
    ++rank;
  }
  return rank;
}

std::vector<int> pivot_columns(std::vector<std::vector<FieldScalar>> m,
                               const std::vector<int>& column_order) {
  std::vector<int> pivots;
  if (m.empty()) return pivots;
  const int rows = static_cast<int>(m.size());
  int rank = 0;
  for (const int c : column_order) {
    if (rank >= rows) break;
    int pivot = -1;
    for (int r = rank; r < rows; ++r)
      if (!m[r][c].is_zero()) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    std::swap(m[rank], m[pivot]);
    const FieldScalar inv = m[rank][c].inverse();
    for (int r = rank + 1; r < rows; ++r) {
      if (m[r][c].is_zero()) continue;
      const FieldScalar f = m[r][c] * inv;
      for (size_t k = 0; k < m[r].size(); ++k) m[r][k] = m[r][k] - f * m[rank][k];
    }
    pivots.push_back(c);
    ++rank;
  }
  return pivots;
}

}  // namespace hilbspine
