#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "hilbspine/dominance.hpp"
#include "hilbspine/errors.hpp"
#include "hilbspine/json_io.hpp"
#include "hilbspine/spine.hpp"

using namespace hilbspine;

namespace {

using EdgeSet = std::set<std::pair<int, int>>;

EdgeSet edge_pairs(const SpineGraph& G) {
  EdgeSet s;
  for (const auto& e : G.edges) s.insert({e.u, e.v});
  return s;
}

// Brute rebuild of the edge set, scanning gradings far beyond the a,b <= N
// window the library uses.
EdgeSet edges_by_scan(int N, int bound) {
  const auto vertices = enumerate_ideals(N);
  EdgeSet out;
  for (int a = 1; a <= bound; ++a)
    for (int b = 1; b <= bound; ++b) {
      if (std::gcd(a, b) != 1) continue;
      const Grading g(a, b);
      std::map<HilbertFunction, std::vector<int>> fibers;
      for (size_t k = 0; k < vertices.size(); ++k)
        fibers[graded_hilbert_function(vertices[k], g)].push_back(static_cast<int>(k));
      for (const auto& [h, members] : fibers) {
        if (members.size() < 2) continue;
        std::vector<MonomialIdeal> fiber;
        for (int k : members) fiber.push_back(vertices[k]);
        const auto [lo, hi] = extreme_indices(fiber, g);
        int u = members[lo], v = members[hi];
        if (u > v) std::swap(u, v);
        out.insert({u, v});
      }
    }
  return out;
}

}  // namespace

TEST_CASE("small spines are the known graphs") {
  const auto G1 = spine_graph(1);
  CHECK(G1.vertices.size() == 1);
  CHECK(G1.edges.empty());

  const auto G2 = spine_graph(2);
  REQUIRE(G2.vertices.size() == 2);
  REQUIRE(G2.edges.size() == 1);
  CHECK(G2.edges[0].u == 0);
  CHECK(G2.edges[0].v == 1);
  REQUIRE(G2.edges[0].witnesses.size() == 1);
  CHECK(G2.edges[0].witnesses[0].grading == Grading(1, 1));
  CHECK(G2.edges[0].witnesses[0].hf == HilbertFunction({1, 1}));

  // Colength 3 is a triangle; the mixed edges are seen only away from (1,1).
  const auto G3 = spine_graph(3);
  CHECK(G3.vertices.size() == 3);
  CHECK(edge_pairs(G3) == EdgeSet{{0, 1}, {0, 2}, {1, 2}});
  for (const auto& e : G3.edges) REQUIRE(!e.witnesses.empty());
  CHECK(G3.edges[0].witnesses[0].grading == Grading(1, 2));
  CHECK(G3.edges[1].witnesses[0].grading == Grading(1, 1));
  CHECK(G3.edges[2].witnesses[0].grading == Grading(2, 1));
}

TEST_CASE("gradings beyond the a,b <= N window add no edges (N <= 6)") {
  for (int N = 2; N <= 6; ++N) {
    const auto G = spine_graph(N);
    CHECK(edge_pairs(G) == edges_by_scan(N, 3 * N));
  }
}

TEST_CASE("edge endpoints are the dominance extremes of each witness fiber") {
  const auto G = spine_graph(5);
  for (const auto& e : G.edges) {
    CHECK(e.u < e.v);
    REQUIRE(!e.witnesses.empty());
    for (const auto& w : e.witnesses) {
      const auto fiber = ideals_with_hf(w.hf, w.grading);
      REQUIRE(fiber.size() >= 2);
      const auto [lo, hi] = extreme_indices(fiber, w.grading);
      const std::set<std::string> got{to_string(fiber[lo]), to_string(fiber[hi])};
      const std::set<std::string> expect{to_string(G.vertices[e.u]),
                                         to_string(G.vertices[e.v])};
      CHECK(got == expect);
    }
  }
}

TEST_CASE("colength-6 spine regression") {
  const auto G = spine_graph(6);
  CHECK(G.vertices.size() == 11);
  CHECK(G.edges.size() == 17);  // frozen from a verified run

  // The spine at colength 6 is NOT connected: 4,1,1 and 3,1,1,1 (a
  // transpose pair) sit in singleton fibers or strictly between the
  // extremes of every multi-element fiber, so no edge reaches them.
  std::vector<int> comp(G.vertices.size());
  std::iota(comp.begin(), comp.end(), 0);
  for (const auto& e : G.edges) {
    const int a = comp[e.u], b = comp[e.v];
    for (auto& c : comp)
      if (c == b) c = a;
  }
  std::map<int, std::set<std::string>> parts;
  for (size_t v = 0; v < comp.size(); ++v)
    parts[comp[v]].insert(to_string(G.vertices[v]));
  REQUIRE(parts.size() == 3);
  std::vector<std::set<std::string>> classes;
  for (const auto& [root, names] : parts) classes.push_back(names);
  std::sort(classes.begin(), classes.end(),
            [](const auto& a, const auto& b) { return a.size() > b.size(); });
  CHECK(classes[0].size() == 9);
  const std::set<std::string> iso{*classes[1].begin(), *classes[2].begin()};
  CHECK(iso == std::set<std::string>{"4,1,1", "3,1,1,1"});
}

TEST_CASE("spine JSON round-trips") {
  for (int N : {2, 4, 5}) {
    const auto G = spine_graph(N);
    const Json j = spine_to_json(G);
    CHECK(spine_from_json(j) == G);
  }
  CHECK_THROWS_AS(spine_from_json(Json::parse("{}")), input_error);
  CHECK_THROWS_AS(spine_from_json(Json::parse("[]")), input_error);
  CHECK_THROWS_AS(spine_from_json(Json::parse(R"({"colength":"x"})")), input_error);
}

TEST_CASE("dot output") {
  const auto G2 = spine_graph(2);
  CHECK(spine_to_dot(G2) == "graph spine2 {\n  \"2\";\n  \"1,1\";\n  \"2\" -- \"1,1\";\n}\n");
  CHECK(spine_to_dot(G2, true) ==
        "graph spine2 {\n  \"2\";\n  \"1,1\";\n  \"2\" -- \"1,1\" [label=\"(1,1)\"];\n}\n");

  const auto dot = spine_to_dot(spine_graph(4));
  size_t edges = 0;
  for (size_t pos = dot.find(" -- "); pos != std::string::npos; pos = dot.find(" -- ", pos + 1))
    edges++;
  CHECK(edges == 6);
}

TEST_CASE("guards and input validation") {
  CHECK_THROWS_AS(spine_graph(0), input_error);
  CHECK_THROWS_AS(spine_graph(31), guard_error);
  CHECK_THROWS_AS(spine_graph(7, 6), guard_error);
}
