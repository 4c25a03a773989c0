#include "hilbspine/dominance.hpp"

#include <algorithm>

#include "hilbspine/errors.hpp"

namespace hilbspine {

namespace {
// Degree-d monomials of M (i.e. of the ideal), sorted descending in lex.
std::vector<Monomial> ideal_slice_desc(const MonomialIdeal& M, const Grading& g, int d) {
  std::vector<Monomial> s;
  for (const Monomial& m : monomials_of_degree(g, d))
    if (M.contains(m)) s.push_back(m);
  std::reverse(s.begin(), s.end());  // monomials_of_degree is lex-ascending
  return s;
}
}  // namespace

bool dominance_leq(const MonomialIdeal& M, const MonomialIdeal& M2, const Grading& g) {
  const HilbertFunction h = graded_hilbert_function(M, g);
  if (h != graded_hilbert_function(M2, g))
    throw input_error("dominance_leq requires equal graded Hilbert functions");
  // Beyond dmax the slices of M and M2 agree (all monomials of the degree),
  // so the identity matches them; only d <= dmax needs checking.
  for (int d = 0; d <= h.dmax(); ++d) {
    const auto a = ideal_slice_desc(M, g, d);
    const auto b = ideal_slice_desc(M2, g, d);
    // Equal Hilbert functions give equal slice sizes.
    for (size_t t = 0; t < a.size(); ++t)
      if (lex_xy_less(a[t], b[t])) return false;  // need a[t] >= b[t]
  }
  return true;
}

std::pair<int, int> extreme_indices(const std::vector<MonomialIdeal>& fiber, const Grading& g) {
  if (fiber.empty()) throw input_error("extreme_indices: empty fiber");
  int lo = 0, hi = 0;
  for (int k = 1; k < static_cast<int>(fiber.size()); ++k) {
    if (dominance_leq(fiber[k], fiber[lo], g)) lo = k;
    if (dominance_leq(fiber[hi], fiber[k], g)) hi = k;
  }
  // The scan finds the unique extreme if one exists (it displaces any earlier
  // candidate and nothing can displace it); confirm against every member.
  for (const auto& M : fiber) {
    if (!dominance_leq(fiber[lo], M, g))
      throw std::logic_error("extreme_indices: fiber has no unique minimum");
    if (!dominance_leq(M, fiber[hi], g))
      throw std::logic_error("extreme_indices: fiber has no unique maximum");
  }
  return {lo, hi};
}

std::pair<MonomialIdeal, MonomialIdeal> lex_extremes(const HilbertFunction& h, const Grading& g) {
  const auto fiber = ideals_with_hf(h, g);
  if (fiber.empty())
    throw input_error("lex_extremes: no ideal has Hilbert function (" + to_string(h) +
                      ") under grading " + to_string(g));
  auto [lo, hi] = extreme_indices(fiber, g);
  return {fiber[lo], fiber[hi]};
}

DominancePoset poset_hasse(const HilbertFunction& h, const Grading& g) {
  DominancePoset p{g, h, ideals_with_hf(h, g), {}, {}};
  const int n = static_cast<int>(p.elements.size());
  if (n == 0) throw input_error("poset_hasse: empty fiber");

  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) leq[u][v] = dominance_leq(p.elements[u], p.elements[v], g);

  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (u != v && leq[u][v]) {
        p.relation.emplace_back(u, v);
        bool cover = true;
        for (int w = 0; w < n && cover; ++w)
          if (w != u && w != v && leq[u][w] && leq[w][v]) cover = false;
        if (cover) p.covers.emplace_back(u, v);
      }

  for (int u = 0; u < n; ++u) {
    if (std::all_of(leq[u].begin(), leq[u].end(), [](bool b) { return b; })) p.min_index = u;
    bool is_max = true;
    for (int v = 0; v < n; ++v) is_max = is_max && leq[v][u];
    if (is_max) p.max_index = u;
  }
  if (p.min_index < 0 || p.max_index < 0)
    throw std::logic_error("poset_hasse: fiber lacks a unique extreme");
  return p;
}

}  // namespace hilbspine
