#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "hilbspine/errors.hpp"
#include "hilbspine/staircase.hpp"

using namespace hilbspine;

namespace {

std::vector<MonomialIdeal> all_ideals_up_to(int maxN) {
  std::vector<MonomialIdeal> out;
  for (int N = 1; N <= maxN; ++N)
    for (auto& M : enumerate_ideals(N)) out.push_back(M);
  return out;
}

// Independent membership oracle: the staircase cells, as an explicit set.
std::set<std::pair<int, int>> cell_set(const MonomialIdeal& M) {
  std::set<std::pair<int, int>> cells;
  for (int j = 0; j < M.num_rows(); ++j)
    for (int i = 0; i < M.partition()[j]; ++i) cells.insert({i, j});
  return cells;
}

}  // namespace

TEST_CASE("membership matches the cell set") {
  for (const auto& M : all_ideals_up_to(7)) {
    const auto cells = cell_set(M);
    const int bi = M.partition()[0] + 2;
    const int bj = M.num_rows() + 2;
    for (int i = 0; i <= bi; ++i)
      for (int j = 0; j <= bj; ++j)
        CHECK(M.contains({i, j}) == (cells.count({i, j}) == 0));
    CHECK(static_cast<int>(cells.size()) == M.colength());
  }
}

TEST_CASE("minimal generators match a box scan") {
  for (const auto& M : all_ideals_up_to(7)) {
    // m is a minimal generator iff m is in M but neither m/x nor m/y is.
    std::vector<Monomial> expect;
    for (int j = 0; j <= M.num_rows(); ++j)
      for (int i = 0; i <= M.partition()[0]; ++i) {
        const Monomial m{i, j};
        if (!M.contains(m)) continue;
        if (i > 0 && M.contains({i - 1, j})) continue;
        if (j > 0 && M.contains({i, j - 1})) continue;
        expect.push_back(m);
      }
    std::sort(expect.begin(), expect.end(), LexXYLess{});
    REQUIRE(M.generators() == expect);

    const auto& gens = M.generators();
    CHECK(gens.front() == Monomial{M.partition()[0], 0});
    CHECK(gens.back() == Monomial{0, M.num_rows()});
    for (size_t k = 1; k < gens.size(); ++k) {
      CHECK(gens[k].j > gens[k - 1].j);
      CHECK(gens[k].i < gens[k - 1].i);
    }
    CHECK(M.e() == static_cast<int>(gens.size()) - 1);
  }
}

TEST_CASE("enumerate_ideals lists partitions in descending lex order") {
  const auto ideals = enumerate_ideals(10);
  CHECK(ideals.size() == 42);  // p(10)
  CHECK(to_string(ideals.front()) == "10");
  CHECK(to_string(ideals.back()) == "1,1,1,1,1,1,1,1,1,1");
  for (size_t k = 1; k < ideals.size(); ++k)
    CHECK(ideals[k].partition() < ideals[k - 1].partition());
  for (const auto& M : ideals) CHECK(M.colength() == 10);

  CHECK_THROWS_AS(enumerate_ideals(0), input_error);
}

TEST_CASE("graded Hilbert function counts staircase monomials per degree") {
  const std::vector<Grading> gs{{1, 1}, {1, 2}, {2, 3}, {3, 1}};
  for (const auto& M : all_ideals_up_to(7))
    for (const auto& g : gs) {
      const auto h = graded_hilbert_function(M, g);
      CHECK(h.total() == M.colength());
      // Cross-check against independent per-degree enumeration.
      const int top = g.degree({M.partition()[0], M.num_rows()});
      for (int d = 0; d <= top + 1; ++d) {
        int n = 0;
        for (const auto& m : monomials_of_degree(g, d))
          if (!M.contains(m)) n++;
        CHECK(h(d) == n);
      }
    }

  CHECK(to_string(graded_hilbert_function(MonomialIdeal({5, 1}), Grading(1, 2))) ==
        "1,1,2,1,1");
  CHECK(to_string(graded_hilbert_function(MonomialIdeal({2, 2}), Grading(1, 1))) ==
        "1,2,1");
}

TEST_CASE("monomials_of_degree is complete, correct and lex-ascending") {
  const std::vector<Grading> gs{{1, 1}, {2, 3}, {1, 3}};
  for (const auto& g : gs)
    for (int d = 0; d <= 15; ++d) {
      const auto ms = monomials_of_degree(g, d);
      for (const auto& m : ms) CHECK(g.degree(m) == d);
      for (size_t k = 1; k < ms.size(); ++k) CHECK(lex_xy_less(ms[k - 1], ms[k]));
      int expect = 0;
      for (int i = 0; i <= d; ++i)
        for (int j = 0; j <= d; ++j)
          if (g.degree({i, j}) == d) expect++;
      CHECK(static_cast<int>(ms.size()) == expect);
    }
  // Standard grading: d+1 monomials in degree d.
  for (int d = 0; d <= 8; ++d)
    CHECK(monomials_of_degree(Grading(1, 1), d).size() == static_cast<size_t>(d + 1));
  CHECK(monomials_of_degree(Grading(1, 1), -1).empty());
}

TEST_CASE("j_plus and j_minus bound the dividing generators") {
  for (const auto& M : all_ideals_up_to(6)) {
    const auto& gens = M.generators();
    const int bi = M.partition()[0] + 2;
    const int bj = M.num_rows() + 2;
    for (int i = 0; i <= bi; ++i)
      for (int j = 0; j <= bj; ++j) {
        const Monomial m{i, j};
        if (!M.contains(m)) {
          CHECK_THROWS_AS(M.j_plus(m), input_error);
          CHECK_THROWS_AS(M.j_minus(m), input_error);
          continue;
        }
        std::vector<int> dividing;
        for (size_t k = 0; k < gens.size(); ++k)
          if (divides(gens[k], m)) dividing.push_back(static_cast<int>(k));
        REQUIRE(!dividing.empty());
        CHECK(M.j_minus(m) == dividing.front());
        CHECK(M.j_plus(m) == dividing.back());
        // Dividing generators form a consecutive index range.
        CHECK(dividing.back() - dividing.front() + 1 ==
              static_cast<int>(dividing.size()));
      }
  }
}

TEST_CASE("w(i) is the lcm of consecutive generators") {
  const MonomialIdeal M({6, 4, 2, 1});
  CHECK(M.w(1) == Monomial{6, 1});
  CHECK(M.w(2) == Monomial{4, 2});
  CHECK(M.w(3) == Monomial{2, 3});
  CHECK(M.w(4) == Monomial{1, 4});
  CHECK_THROWS_AS(M.w(0), input_error);
  CHECK_THROWS_AS(M.w(5), input_error);

  for (const auto& N : all_ideals_up_to(6))
    for (int i = 1; i <= N.e(); ++i)
      CHECK(N.w(i) == lcm(N.generators()[i], N.generators()[i - 1]));
}

TEST_CASE("transpose conjugates the partition") {
  CHECK(MonomialIdeal({6, 4, 2, 1}).transpose() == MonomialIdeal({4, 3, 2, 2, 1, 1}));
  CHECK(MonomialIdeal({1}).transpose() == MonomialIdeal({1}));
  for (const auto& M : all_ideals_up_to(7)) {
    const auto T = M.transpose();
    CHECK(T.colength() == M.colength());
    CHECK(T.transpose() == M);
    // Membership swaps coordinates.
    for (int i = 0; i <= 8; ++i)
      for (int j = 0; j <= 8; ++j) CHECK(M.contains({i, j}) == T.contains({j, i}));
  }
}

TEST_CASE("staircase_monomials lists the complement in lex order") {
  const MonomialIdeal M({3, 1});
  const std::vector<Monomial> expect{{0, 0}, {1, 0}, {2, 0}, {0, 1}};
  CHECK(M.staircase_monomials() == expect);

  for (const auto& N : all_ideals_up_to(7)) {
    const auto cells = N.staircase_monomials();
    CHECK(static_cast<int>(cells.size()) == N.colength());
    for (const auto& m : cells) CHECK(!N.contains(m));
    for (size_t k = 1; k < cells.size(); ++k) CHECK(lex_xy_less(cells[k - 1], cells[k]));
  }
}

TEST_CASE("invalid partitions are rejected") {
  CHECK_THROWS_AS(MonomialIdeal({}), input_error);
  CHECK_THROWS_AS(MonomialIdeal({0}), input_error);
  CHECK_THROWS_AS(MonomialIdeal({2, -1}), input_error);
  CHECK_THROWS_AS(MonomialIdeal({1, 2}), input_error);
}

TEST_CASE("gradings normalize and validate") {
  CHECK(Grading(2, 4) == Grading(1, 2));
  CHECK(Grading(3, 3) == Grading(1, 1));
  CHECK(Grading(6, 4).a() == 3);
  CHECK(Grading(6, 4).b() == 2);
  CHECK_THROWS_AS(Grading(0, 1), input_error);
  CHECK_THROWS_AS(Grading(1, 0), input_error);
  CHECK_THROWS_AS(Grading(-1, 2), input_error);
  CHECK(Grading(1, 1).is_standard());
  CHECK(!Grading(2, 3).is_standard());
}

TEST_CASE("shift moves along a fixed degree") {
  const Grading g(2, 3);  // r = x^3 / y^2
  CHECK(g.shift({1, 4}, 1) == Monomial{4, 2});
  CHECK(g.shift({1, 4}, 2) == Monomial{7, 0});
  CHECK(g.shift({1, 4}, 3) == std::nullopt);
  CHECK(g.shift({4, 2}, -1) == Monomial{1, 4});
  CHECK(g.shift({4, 2}, -2) == std::nullopt);
  CHECK(g.shift({1, 4}, 0) == Monomial{1, 4});

  CHECK(g.shift_exponent({1, 4}, {7, 0}) == 2);
  CHECK(g.shift_exponent({7, 0}, {1, 4}) == -2);
  CHECK(g.shift_exponent({1, 4}, {1, 4}) == 0);
  CHECK(g.shift_exponent({1, 4}, {2, 4}) == std::nullopt);
  CHECK(g.shift_exponent({0, 0}, {0, 0}) == 0);

  for (int i = 0; i <= 5; ++i)
    for (int j = 0; j <= 5; ++j)
      for (int l = -3; l <= 3; ++l) {
        const auto s = g.shift({i, j}, l);
        if (!s) continue;
        CHECK(g.degree(*s) == g.degree({i, j}));
        CHECK(g.shift_exponent({i, j}, *s) == l);
      }
}

TEST_CASE("ideals_with_hf returns the fiber in enumeration order") {
  const auto fiber =
      ideals_with_hf(HilbertFunction({1, 1, 2, 1, 1}), Grading(1, 2));
  REQUIRE(fiber.size() == 4);
  CHECK(to_string(fiber[0]) == "5,1");
  CHECK(to_string(fiber[1]) == "4,1,1");
  CHECK(to_string(fiber[2]) == "3,3");
  CHECK(to_string(fiber[3]) == "3,2,1");

  CHECK(ideals_with_hf(HilbertFunction({1, 3, 1}), Grading(1, 2)).empty());
}

TEST_CASE("HilbertFunction trims, compares and prints") {
  const HilbertFunction h({1, 2, 0});
  CHECK(h == HilbertFunction({1, 2}));
  CHECK(h.dmax() == 1);
  CHECK(h.total() == 3);
  CHECK(h(0) == 1);
  CHECK(h(5) == 0);
  CHECK(h(-1) == 0);
  CHECK(to_string(h) == "1,2");
  CHECK(HilbertFunction({1, 1}) < HilbertFunction({1, 2}));
  CHECK(HilbertFunction().dmax() == -1);
}
