#include "hilbspine/spine.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "hilbspine/errors.hpp"

namespace hilbspine {

bool operator==(const SpineGraph& a, const SpineGraph& b) {
  if (a.colength != b.colength || a.vertices.size() != b.vertices.size() ||
      a.edges.size() != b.edges.size())
    return false;
  for (size_t k = 0; k < a.vertices.size(); ++k)
    if (!(a.vertices[k] == b.vertices[k])) return false;
  for (size_t k = 0; k < a.edges.size(); ++k) {
    const auto& ea = a.edges[k];
    const auto& eb = b.edges[k];
    if (ea.u != eb.u || ea.v != eb.v || ea.witnesses.size() != eb.witnesses.size()) return false;
    for (size_t t = 0; t < ea.witnesses.size(); ++t)
      if (!(ea.witnesses[t].grading == eb.witnesses[t].grading &&
            ea.witnesses[t].hf == eb.witnesses[t].hf))
        return false;
  }
  return true;
}

SpineGraph spine_graph(int N, int max_colength) {
  if (N < 1) throw input_error("spine_graph: colength must be >= 1");
  if (N > max_colength)
    throw guard_error("spine_graph: colength " + std::to_string(N) +
                      " exceeds the configured cap " + std::to_string(max_colength));

  SpineGraph G;
  G.colength = N;
  G.vertices = enumerate_ideals(N);

  std::map<std::pair<int, int>, std::vector<EdgeWitness>> edges;
  for (int a = 1; a <= N; ++a)
    for (int b = 1; b <= N; ++b) {
      if (std::gcd(a, b) != 1) continue;
      const Grading g(a, b);
      // Group the fixed vertex list by Hilbert function; fibers keep the
      // enumeration order, and fibers are visited in first-member order.
      std::map<HilbertFunction, std::vector<int>> fibers;
      std::vector<HilbertFunction> order;
      for (size_t k = 0; k < G.vertices.size(); ++k) {
        HilbertFunction h = graded_hilbert_function(G.vertices[k], g);
        auto [it, fresh] = fibers.try_emplace(h);
        if (fresh) order.push_back(h);
        it->second.push_back(static_cast<int>(k));
      }
      std::sort(order.begin(), order.end(),
                [&](const HilbertFunction& x, const HilbertFunction& y) {
                  return fibers[x].front() < fibers[y].front();
                });
      for (const auto& h : order) {
        const auto& members = fibers[h];
        if (members.size() < 2) continue;
        std::vector<MonomialIdeal> fiber;
        fiber.reserve(members.size());
        for (int k : members) fiber.push_back(G.vertices[k]);
        auto [lo, hi] = extreme_indices(fiber, g);
        int u = members[lo];
        int v = members[hi];
        if (u > v) std::swap(u, v);
        edges[{u, v}].push_back({g, h});
      }
    }

  for (auto& [key, witnesses] : edges)
    G.edges.push_back({key.first, key.second, std::move(witnesses)});
  return G;
}

std::string spine_to_dot(const SpineGraph& G, bool edge_labels) {
  std::string out = "graph spine" + std::to_string(G.colength) + " {\n";
  for (const auto& M : G.vertices) out += "  \"" + to_string(M) + "\";\n";
  for (const auto& e : G.edges) {
    out += "  \"" + to_string(G.vertices[e.u]) + "\" -- \"" + to_string(G.vertices[e.v]) + "\"";
    if (edge_labels) {
      std::string label;
      for (size_t t = 0; t < e.witnesses.size(); ++t) {
        if (t) label += " ";
        label += to_string(e.witnesses[t].grading);
      }
      out += " [label=\"" + label + "\"]";
    }
    out += ";\n";
  }
  out += "}\n";
  return out;
}

}  // namespace hilbspine
