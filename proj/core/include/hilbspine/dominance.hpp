#pragma once

#include <utility>
#include <vector>

#include "hilbspine/staircase.hpp"

namespace hilbspine {

// Graded dominance order on a fiber of monomial ideals with equal g-graded
// Hilbert function: M <= M2 iff for every degree d there is a bijection f
// from the degree-d monomials of M to those of M2 with m >= f(m) in lex
// (x < y). Equivalent greedy form on a totally ordered slice: sort both
// slices descending and compare pointwise. Requires equal Hilbert functions.
bool dominance_leq(const MonomialIdeal& M, const MonomialIdeal& M2, const Grading& g);

// Indices of the unique minimum / maximum of a nonempty fiber of ideals with
// equal g-graded Hilbert function. Throws logic_error if an extreme is not
// unique (which would contradict the dominance-order structure of fibers).
std::pair<int, int> extreme_indices(const std::vector<MonomialIdeal>& fiber, const Grading& g);

// The lex-least (unique minimum) and lex-most (unique maximum) ideals of the
// fiber ideals_with_hf(h, g). Requires a nonempty fiber. Uniqueness of the
// extremes is asserted against the whole fiber.
std::pair<MonomialIdeal, MonomialIdeal> lex_extremes(const HilbertFunction& h, const Grading& g);

// A fiber with its dominance relation and Hasse diagram (indices into
// `elements`, which inherits the enumerate_ideals order).
struct DominancePoset {
  Grading grading;
  HilbertFunction hf;
  std::vector<MonomialIdeal> elements;
  std::vector<std::pair<int, int>> relation;  // (u,v), u != v, elements[u] <= elements[v]
  std::vector<std::pair<int, int>> covers;    // transitive reduction of `relation`
  int min_index = -1;
  int max_index = -1;
};

DominancePoset poset_hasse(const HilbertFunction& h, const Grading& g);

}  // namespace hilbspine
