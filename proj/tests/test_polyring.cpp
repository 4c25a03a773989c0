#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "hilbspine/det.hpp"
#include "hilbspine/errors.hpp"

using namespace hilbspine;

namespace {

// Sign of a permutation by inversion count.
int perm_sign(const std::vector<int>& p) {
  int inv = 0;
  for (size_t a = 0; a < p.size(); ++a)
    for (size_t b = a + 1; b < p.size(); ++b)
      if (p[a] > p[b]) inv++;
  return inv % 2 ? -1 : 1;
}

// Leibniz-formula determinant, usable up to ~6x6.
CPolynomial det_leibniz(const PolyMatrix& A) {
  const int n = static_cast<int>(A.size());
  const int nvars = A[0][0].nvars();
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  CPolynomial out(nvars);
  do {
    CPolynomial prod = CPolynomial::constant(nvars, perm_sign(p));
    for (int r = 0; r < n; ++r) prod = prod * A[r][p[r]];
    out += prod;
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

CPolynomial random_poly(std::mt19937& rng, int nvars) {
  std::uniform_int_distribution<int> nterms(1, 3), expd(0, 2), coeff(-3, 3);
  CPolynomial p(nvars);
  const int t = nterms(rng);
  for (int k = 0; k < t; ++k) {
    std::vector<int> e(nvars);
    for (int& x : e) x = expd(rng);
    p += CPolynomial::term(nvars, e, coeff(rng));
  }
  return p;
}

}  // namespace

TEST_CASE("VarTable orders, names and weights the arrow variables") {
  const auto vars = VarTable::for_ideal(MonomialIdeal({6, 4, 2, 1}), Grading(1, 1));
  REQUIRE(vars.size() == 5);
  CHECK(vars.name(0) == "c(1,1)");
  CHECK(vars.name(1) == "c(2,1)");
  CHECK(vars.name(2) == "c(2,2)");
  CHECK(vars.name(3) == "c(3,2)");
  CHECK(vars.name(4) == "c(4,3)");
  CHECK(vars.weight(3) == 2);
  CHECK(vars.index_of({2, 2}) == 2);
  CHECK(vars.index_of({2, 3}) == std::nullopt);
  CHECK(vars.arrow(4) == Arrow{4, 3});
  CHECK_THROWS_AS(VarTable({{2, 1}, {1, 1}}), input_error);
  CHECK_THROWS_AS(VarTable({{1, 1}, {1, 1}}), input_error);
}

TEST_CASE("polynomial arithmetic and printing") {
  const int n = 3;  // variables c(1,1) < c(2,1) < c(2,2)
  const VarTable vars({{1, 1}, {2, 1}, {2, 2}});
  const auto v0 = CPolynomial::variable(n, 0);
  const auto v1 = CPolynomial::variable(n, 1);
  const auto v2 = CPolynomial::variable(n, 2);

  CHECK((v0 + v1).to_string(vars) == "c(1,1)+c(2,1)");
  CHECK(((v0 + v1) * (v0 + v1)).to_string(vars) ==
        "c(1,1)^2+2*c(2,1)*c(1,1)+c(2,1)^2");
  CHECK((v1 * v0 + v2).to_string(vars) == "c(2,1)*c(1,1)+c(2,2)");
  CHECK((v2 - v0 * v0).to_string(vars) == "-c(1,1)^2+c(2,2)");
  CHECK((v0 - v0).to_string(vars) == "0");
  CHECK(CPolynomial::constant(n, -7).to_string(vars) == "-7");
  CHECK((CPolynomial::constant(n, 2) - CPolynomial::variable(n, 1, 2)).to_string(vars) ==
        "2-c(2,1)^2");

  CHECK((v0 + v1) == (v1 + v0));
  CHECK(((v0 + v1) * (v0 - v1)) == (v0 * v0 - v1 * v1));
  CHECK((v0 * (v1 + v2)) == (v0 * v1 + v0 * v2));
  CHECK((-(v0 - v1)) == (v1 - v0));
  CHECK(v2.is_zero() == false);
  CHECK((v2 - v2).is_zero());
  CHECK(CPolynomial::constant(n, 0).is_zero());
  CHECK(CPolynomial::constant(n, 5).is_constant());
  CHECK(!v1.is_constant());

  // The highest variable index is the most significant position.
  const auto f = v2 + v1 * v1 * v0;
  CHECK(f.leading_exponents() == std::vector<int>{0, 0, 1});
  CHECK(f.leading_coefficient() == 1);
  CHECK(f.coefficient_of({1, 2, 0}) == 1);
  CHECK(f.coefficient_of({0, 1, 0}) == 0);
  CHECK_THROWS_AS(CPolynomial(n).leading_exponents(), input_error);
  CHECK_THROWS_AS((v0 + CPolynomial::variable(2, 0)), input_error);
}

TEST_CASE("weighted degrees follow the arrow lengths") {
  const VarTable vars({{1, 1}, {2, 1}, {2, 2}});
  const std::vector<int> w{vars.weight(0), vars.weight(1), vars.weight(2)};
  const auto v0 = CPolynomial::variable(3, 0);
  const auto v1 = CPolynomial::variable(3, 1);
  const auto v2 = CPolynomial::variable(3, 2);
  CHECK((v1 * v0 + v2).weighted_degree(w) == 2);  // homogeneous of weight 2
  CHECK((v0 + v2).weighted_degree(w) == std::nullopt);
  CHECK(CPolynomial(3).weighted_degree(w) == std::nullopt);
  CHECK(CPolynomial::constant(3, 4).weighted_degree(w) == 0);
  CHECK_THROWS_AS(v0.weighted_degree({1, 1}), input_error);
}

TEST_CASE("exact division inverts multiplication") {
  std::mt19937 rng(41);
  for (int trial = 0; trial < 200; ++trial) {
    const auto u = random_poly(rng, 3);
    const auto v = random_poly(rng, 3);
    if (u.is_zero() || v.is_zero()) continue;
    CHECK((u * v).divide_exact(u) == v);
    CHECK((u * v).divide_exact(v) == u);
  }
  const auto v0 = CPolynomial::variable(2, 0);
  const auto v1 = CPolynomial::variable(2, 1);
  CHECK_THROWS_AS(v1.divide_exact(v0), input_error);
  CHECK_THROWS_AS((v0 * v0 + v1).divide_exact(v0), input_error);
  CHECK_THROWS_AS(v0.divide_exact(CPolynomial(2)), input_error);
  CHECK(CPolynomial(2).divide_exact(v0).is_zero());
}

TEST_CASE("determinant backends agree with the Leibniz formula") {
  std::mt19937 rng(99);
  for (int n = 1; n <= 4; ++n)
    for (int trial = 0; trial < 25; ++trial) {
      PolyMatrix A(n, std::vector<CPolynomial>(n, CPolynomial(3)));
      for (auto& row : A)
        for (auto& x : row) x = random_poly(rng, 3);
      const auto expect = det_leibniz(A);
      CHECK(det_bareiss(A) == expect);
      CHECK(determinant(A) == expect);
      std::vector<int> rows(n);
      std::iota(rows.begin(), rows.end(), 0);
      MinorExpander mx(A);
      CHECK(mx.det(rows) == expect);
    }
}

TEST_CASE("determinant structure cases") {
  const int nv = 2;
  const auto v0 = CPolynomial::variable(nv, 0);
  const auto v1 = CPolynomial::variable(nv, 1);
  const auto one = CPolynomial::constant(nv, 1);

  // Equal rows kill the determinant.
  const PolyMatrix sing{{v0, v1}, {v0, v1}};
  CHECK(determinant(sing).is_zero());

  // Triangular with unit diagonal.
  const PolyMatrix tri{{one, v0 * v1}, {CPolynomial(nv), one}};
  CHECK(determinant(tri) == one);

  const PolyMatrix two{{v0, v1}, {one, v0}};
  CHECK(determinant(two) == (v0 * v0 - v1));

  CHECK(determinant(PolyMatrix{}) == CPolynomial::constant(0, 1));
  CHECK_THROWS_AS(determinant(PolyMatrix{{v0, v1}}), input_error);
}

TEST_CASE("MinorExpander covers all row choices") {
  std::mt19937 rng(7);
  PolyMatrix A(5, std::vector<CPolynomial>(3, CPolynomial(2)));
  for (auto& row : A)
    for (auto& x : row) x = random_poly(rng, 2);
  MinorExpander mx(A);
  for (int a = 0; a < 5; ++a)
    for (int b = a + 1; b < 5; ++b)
      for (int c = b + 1; c < 5; ++c) {
        const PolyMatrix sub{A[a], A[b], A[c]};
        CHECK(mx.det({a, b, c}) == det_bareiss(sub));
      }
}

TEST_CASE("oversized determinants hit the guard") {
  const int n = 17;
  PolyMatrix A(n, std::vector<CPolynomial>(n, CPolynomial(1)));
  for (int k = 0; k < n; ++k) A[k][k] = CPolynomial::constant(1, 1);
  CHECK_THROWS_AS(determinant(A), guard_error);
  CHECK(determinant(A, 17) == CPolynomial::constant(1, 1));
}
