#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>
#include <vector>

#include "hilbspine/errors.hpp"
#include "hilbspine/macaulay.hpp"

using namespace hilbspine;

namespace {

std::vector<std::vector<std::string>> entry_strings(const MacaulayMatrix& R) {
  std::vector<std::vector<std::string>> out;
  for (const auto& row : R.entries) {
    out.emplace_back();
    for (const auto& p : row) out.back().push_back(p.to_string(R.vars));
  }
  return out;
}

std::vector<std::string> labels(const std::vector<Monomial>& ms) {
  std::vector<std::string> out;
  for (const auto& m : ms) out.push_back(to_string(m));
  return out;
}

bool distinct_parts(const MonomialIdeal& M) {
  const auto& p = M.partition();
  for (size_t k = 1; k < p.size(); ++k)
    if (p[k] == p[k - 1]) return false;
  return true;
}

}  // namespace

TEST_CASE("degree-4 matrix of the staircase 6,4,2,1") {
  const auto R = macaulay_matrix(MonomialIdeal({6, 4, 2, 1}), Grading(1, 1), 4);
  CHECK(labels(R.rows) ==
        std::vector<std::string>{"x^4", "x^3*y", "x^2*y^2", "x*y^3", "y^4"});
  CHECK(labels(R.cols) == std::vector<std::string>{"x^2*y^2", "x*y^3", "y^4"});
  CHECK(R.n0() == 3);
  CHECK(!R.barred);
  CHECK(entry_strings(R) ==
        std::vector<std::vector<std::string>>{
            {"c(2,1)*c(1,1)+c(2,2)", "c(3,2)*c(1,1)", "c(4,3)*c(1,1)"},
            {"c(1,1)+c(2,1)", "c(2,1)*c(1,1)+c(2,2)+c(3,2)", "c(3,2)*c(1,1)+c(4,3)"},
            {"1", "c(1,1)+c(2,1)", "c(2,1)*c(1,1)+c(2,2)+c(3,2)"},
            {"0", "1", "c(1,1)+c(2,1)"},
            {"0", "0", "1"}});

  const auto B = bar_quotient(R);
  CHECK(B.barred);
  CHECK(entry_strings(B) ==
        std::vector<std::vector<std::string>>{
            {"c(2,1)*c(1,1)+c(2,2)", "0", "0"},
            {"c(1,1)+c(2,1)", "c(2,1)*c(1,1)+c(2,2)", "0"},
            {"1", "c(1,1)+c(2,1)", "c(2,1)*c(1,1)+c(2,2)"},
            {"0", "1", "c(1,1)+c(2,1)"},
            {"0", "0", "1"}});
}

TEST_CASE("degree-18 matrix of the staircase 10,7,7,2,2,1 under (2,3)") {
  const auto R = macaulay_matrix(MonomialIdeal({10, 7, 7, 2, 2, 1}), Grading(2, 3), 18);
  CHECK(labels(R.rows) == std::vector<std::string>{"x^9", "x^6*y^2", "x^3*y^4", "y^6"});
  CHECK(labels(R.cols) == std::vector<std::string>{"x^3*y^4", "y^6"});
  CHECK(entry_strings(R) ==
        std::vector<std::vector<std::string>>{
            {"0", "c(4,3)"}, {"c(2,1)", "c(4,2)"}, {"1", "c(2,1)"}, {"0", "1"}});
}

TEST_CASE("matrices of the staircase 7,1,1,1 under (2,3)") {
  const auto R12 = macaulay_matrix(MonomialIdeal({7, 1, 1, 1}), Grading(2, 3), 12);
  CHECK(labels(R12.rows) == std::vector<std::string>{"x^6", "x^3*y^2", "y^4"});
  CHECK(labels(R12.cols) == std::vector<std::string>{"x^3*y^2", "y^4"});
  CHECK(entry_strings(R12) ==
        std::vector<std::vector<std::string>>{{"0", "c(2,2)"}, {"1", "0"}, {"0", "1"}});

  const auto R8 = macaulay_matrix(MonomialIdeal({7, 1, 1, 1}), Grading(2, 3), 8);
  CHECK(labels(R8.rows) == std::vector<std::string>{"x^4", "x*y^2"});
  CHECK(labels(R8.cols) == std::vector<std::string>{"x*y^2"});
  CHECK(entry_strings(R8) ==
        std::vector<std::vector<std::string>>{{"0"}, {"1"}});
}

TEST_CASE("entries follow the path-sum law") {
  std::vector<std::pair<MonomialIdeal, Grading>> cases;
  for (int N = 1; N <= 5; ++N)
    for (const auto& M : enumerate_ideals(N))
      for (const auto& g : {Grading(1, 1), Grading(1, 2), Grading(2, 3)})
        cases.emplace_back(M, g);
  cases.emplace_back(MonomialIdeal({11, 8, 4, 1, 1, 1, 1}), Grading(1, 2));
  cases.emplace_back(MonomialIdeal({10, 7, 7, 2, 2, 1}), Grading(2, 3));

  for (const auto& [M, g] : cases) {
    const auto h = graded_hilbert_function(M, g);
    for (int d = 0; d <= h.dmax() + 2; ++d) {
      const auto R = macaulay_matrix(M, g, d);
      CHECK(static_cast<int>(R.rows.size()) == R.n0() + h(d));
      const int nv = R.vars.size();
      for (size_t r = 0; r < R.rows.size(); ++r)
        for (size_t c = 0; c < R.cols.size(); ++c) {
          const auto ell = g.shift_exponent(R.cols[c], R.rows[r]);
          CPolynomial expect(nv);
          if (ell && *ell >= 0)
            for (const auto& p : paths_from(M, g, M.j_minus(R.cols[c]), *ell)) {
              CPolynomial prod = CPolynomial::constant(nv, 1);
              for (const auto& a : p.steps)
                prod = prod * CPolynomial::variable(nv, *R.vars.index_of(a));
              expect += prod;
            }
          CHECK(R.entries[r][c] == expect);
        }
      // Upper triangular with unit diagonal.
      for (size_t c = 0; c < R.cols.size(); ++c)
        for (size_t r = 0; r < R.rows.size(); ++r) {
          if (lex_xy_less(R.cols[c], R.rows[r])) CHECK(R.entries[r][c].is_zero());
          if (R.rows[r] == R.cols[c])
            CHECK(R.entries[r][c] == CPolynomial::constant(nv, 1));
        }
    }
  }
}

TEST_CASE("bar quotient is a banded Toeplitz matrix") {
  for (int N = 1; N <= 6; ++N)
    for (const auto& M : enumerate_ideals(N)) {
      if (!distinct_parts(M)) continue;  // bar quotient needs the lex-least vertex
      const auto h = graded_hilbert_function(M, Grading(1, 1));
      for (int d = 0; d <= h.dmax() + 1; ++d) {
        const auto R = macaulay_matrix(M, Grading(1, 1), d);
        if (R.n0() == 0) continue;
        const auto B = bar_quotient(R);
        const int l0 = M.j_minus(B.cols[0]);
        // Variables above the cutoff are killed everywhere.
        for (const auto& row : B.entries)
          for (const auto& p : row)
            for (const auto& [e, coef] : p.terms())
              for (int v = 0; v < B.vars.size(); ++v)
                if (e[v] > 0) CHECK(B.vars.arrow(v).index <= l0);
        // Band: nonzero entries sit at shifts 0..l0 of the column; the entry
        // depends only on the shift, and the extreme diagonals are 1 and a
        // nonzero constant polynomial shared by every column.
        for (size_t c = 0; c < B.cols.size(); ++c)
          for (size_t r = 0; r < B.rows.size(); ++r) {
            const auto ell = Grading(1, 1).shift_exponent(B.cols[c], B.rows[r]);
            if (!ell || *ell < 0 || *ell > l0) {
              CHECK(B.entries[r][c].is_zero());
              continue;
            }
            const auto ref = Grading(1, 1).shift(B.cols[0], *ell);
            REQUIRE(ref.has_value());
            size_t r0 = 0;
            while (B.rows[r0] != *ref) r0++;
            CHECK(B.entries[r][c] == B.entries[r0][0]);
            if (*ell == 0) CHECK(B.entries[r][c] == CPolynomial::constant(B.vars.size(), 1));
            if (*ell == l0) CHECK(!B.entries[r][c].is_zero());
          }
      }
    }
}

TEST_CASE("all maximal minors of small cases verify and certify") {
  const auto report = verify_minors_nonzero(MonomialIdeal({3, 1}), 2);
  CHECK(report.minor_count == 3);
  CHECK(report.all_nonzero);
  CHECK(report.all_certified);
  REQUIRE(report.minors.size() == 3);
  CHECK(report.minors[0].rows == std::vector<int>{0, 1});
  CHECK(report.minors[0].q == "c(1,1)^2");
  CHECK(report.minors[1].rows == std::vector<int>{0, 2});
  CHECK(report.minors[1].q == "c(1,1)");
  CHECK(report.minors[2].rows == std::vector<int>{1, 2});
  CHECK(report.minors[2].q == "1");
  for (const auto& m : report.minors) {
    CHECK(m.nonzero);
    CHECK(m.bar_nonzero);
    CHECK(m.q_coefficient_one);
    CHECK(m.diagonal_leads_with_q);
  }

  const auto big = verify_minors_nonzero(MonomialIdeal({6, 4, 2, 1}), 4);
  CHECK(big.minor_count == 10);
  CHECK(big.all_nonzero);
  CHECK(big.all_certified);
}

TEST_CASE("the certificate monomial need not lead the minor") {
  // Submatrix on rows {x^4, x^2y^2, xy^3} of the barred degree-4 matrix of
  // 6,4,2,1: the minor's variable-lex leading term is -c(2,2)^2, so "leading
  // coefficient 1" would be false; the honest claims are that Q has
  // coefficient exactly 1 and leads the diagonal product.
  const auto B = bar_quotient(macaulay_matrix(MonomialIdeal({6, 4, 2, 1}), Grading(1, 1), 4));
  const std::vector<int> choice{0, 2, 3};
  const auto q = direct_path_certificate(B, choice);
  CHECK(q == std::vector<int>{0, 2, 1, 0, 0});  // c(2,2) * c(2,1)^2
  PolyMatrix sub;
  for (int r : choice) sub.push_back(B.entries[r]);
  const auto det = det_bareiss(sub);
  CHECK(det.coefficient_of(q) == 1);
  CHECK(det.leading_exponents() == std::vector<int>{0, 0, 2, 0, 0});  // c(2,2)^2
  CHECK(det.leading_coefficient() == -1);
}

TEST_CASE("minor verification validates its inputs") {
  CHECK_THROWS_AS(verify_minors_nonzero(MonomialIdeal({2, 2}), 2), input_error);
  CHECK_THROWS_AS(verify_minors_nonzero(MonomialIdeal({3, 1}), 1), input_error);
  CHECK_THROWS_AS(verify_minors_nonzero(MonomialIdeal({3, 1}), 0), input_error);
  CHECK_THROWS_AS(verify_minors_nonzero(MonomialIdeal({3, 1}), 2, 2), guard_error);

  // Degrees past the socle have every monomial in M: one trivial minor.
  const auto r = verify_minors_nonzero(MonomialIdeal({3, 1}), 5);
  CHECK(r.minor_count == 1);
  CHECK(r.all_nonzero);
  CHECK(r.all_certified);
}

TEST_CASE("bar quotient validates its inputs") {
  CHECK_THROWS_AS(bar_quotient(macaulay_matrix(MonomialIdeal({2, 2}), Grading(1, 1), 2)),
                  input_error);
  CHECK_THROWS_AS(bar_quotient(macaulay_matrix(MonomialIdeal({3, 1}), Grading(1, 2), 3)),
                  input_error);
  CHECK_THROWS_AS(bar_quotient(macaulay_matrix(MonomialIdeal({3, 1}), Grading(1, 1), 1)),
                  input_error);
}

TEST_CASE("bordered text dump") {
  const auto s = to_bordered_string(macaulay_matrix(MonomialIdeal({7, 1, 1, 1}), Grading(2, 3), 8));
  CHECK(s.find("x*y^2") != std::string::npos);
  CHECK(s.find("x^4") != std::string::npos);
  int lines = 0;
  for (char ch : s)
    if (ch == '\n') lines++;
  CHECK(lines == 3);  // header + two rows
}
