#pragma once

#include <vector>

#include "hilbspine/dominance.hpp"

namespace hilbspine {

// One reason an edge is present: a coprime grading g and a Hilbert function h
// whose fiber (>= 2 ideals) has the edge's endpoints as dominance extremes.
struct EdgeWitness {
  Grading grading;
  HilbertFunction hf;
};

struct SpineEdge {
  int u = 0;  // indices into SpineGraph::vertices, u < v
  int v = 0;
  std::vector<EdgeWitness> witnesses;  // in grading scan order
};

// The spine of the T-graph on colength-N monomial ideals: vertices are all
// partitions of N; for every coprime grading (a,b) in [1,N]^2 and every
// realized Hilbert function with a fiber of >= 2 ideals, the unordered pair
// {lex-least, lex-most} of the fiber is an edge. Parallel witnesses are
// accumulated, never duplicated.
struct SpineGraph {
  int colength = 0;
  std::vector<MonomialIdeal> vertices;  // enumerate_ideals order
  std::vector<SpineEdge> edges;         // sorted by (u,v)

  friend bool operator==(const SpineGraph& a, const SpineGraph& b);
};

// Scans gradings 1 <= a,b <= N with gcd(a,b) = 1 in ascending (a,b) order.
// Gradings with a > N or b > N cannot contribute: every degree slice of the
// [0,N-1]^2 exponent box is then a singleton, so all fibers are singletons.
// max_colength guards the partition enumeration (guard_error beyond it).
SpineGraph spine_graph(int N, int max_colength = 30);

// Graphviz "graph { ... }" text. With edge_labels, each edge lists its
// witness gradings.
std::string spine_to_dot(const SpineGraph& G, bool edge_labels = false);

}  // namespace hilbspine
