#include "hilbspine/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <iomanip>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "hilbspine/dominance.hpp"
#include "hilbspine/errors.hpp"
#include "hilbspine/macaulay.hpp"
#include "hilbspine/specialized.hpp"
#include "hilbspine/spine.hpp"

namespace hilbspine {

namespace {

// Fibers of the standard grading for all colengths 1..maxN, one per realized
// Hilbert function. Deterministic order: colength, then first-seen function.
struct Fiber {
  HilbertFunction hf;
  std::vector<MonomialIdeal> ideals;
};

std::vector<Fiber> standard_fibers(int maxN) {
  const Grading std11(1, 1);
  std::vector<Fiber> out;
  for (int N = 1; N <= maxN; ++N) {
    std::map<HilbertFunction, std::vector<MonomialIdeal>> by_hf;
    std::vector<HilbertFunction> order;
    for (const auto& M : enumerate_ideals(N)) {
      HilbertFunction h = graded_hilbert_function(M, std11);
      auto [it, inserted] = by_hf.try_emplace(h);
      if (inserted) order.push_back(it->first);
      it->second.push_back(M);
    }
    for (const auto& h : order) out.push_back({h, by_hf.at(h)});
  }
  return out;
}

std::uint32_t subset_mask(const std::vector<Monomial>& ground,
                          const std::vector<Monomial>& subset) {
  std::uint32_t mask = 0;
  for (const auto& m : subset) {
    const auto it = std::find(ground.begin(), ground.end(), m);
    if (it == ground.end()) throw std::logic_error("subset_mask: monomial not in ground set");
    mask |= std::uint32_t{1} << (it - ground.begin());
  }
  return mask;
}

std::vector<std::uint32_t> masks_of(const std::vector<Monomial>& ground,
                                    std::vector<std::vector<Monomial>> subsets) {
  std::vector<std::uint32_t> out;
  for (const auto& s : subsets) out.push_back(subset_mask(ground, s));
  std::sort(out.begin(), out.end());
  return out;
}

// 1. The colength-4 spine: five vertices and exactly six edges.
bool criterion_spine(std::string& details) {
  const SpineGraph G = spine_graph(4);
  using P = std::vector<int>;
  std::set<std::pair<P, P>> want;
  for (auto [u, v] : std::vector<std::pair<P, P>>{{{4}, {3, 1}},
                                                  {{4}, {2, 2}},
                                                  {{4}, {1, 1, 1, 1}},
                                                  {{3, 1}, {2, 1, 1}},
                                                  {{2, 2}, {1, 1, 1, 1}},
                                                  {{2, 1, 1}, {1, 1, 1, 1}}}) {
    if (v < u) std::swap(u, v);
    want.emplace(u, v);
  }
  std::set<std::pair<P, P>> got;
  for (const auto& e : G.edges) {
    P u = G.vertices[e.u].partition(), v = G.vertices[e.v].partition();
    if (v < u) std::swap(u, v);
    got.emplace(std::move(u), std::move(v));
  }
  std::ostringstream os;
  os << G.vertices.size() << " vertices, " << G.edges.size() << " edges";
  details = os.str();
  return G.vertices.size() == 5 && got == want && G.edges.size() == 6;
}

// 2. Positive significant arrows of the running seven-row staircase.
bool criterion_arrows(std::string& details) {
  const auto got = positive_arrows(MonomialIdeal({11, 8, 4, 1, 1, 1, 1}), Grading(1, 2));
  const std::vector<Arrow> want = {{1, 1}, {2, 1}, {2, 2}, {3, 1}, {3, 2}};
  details = "T+ = " + to_string(got);
  return got == want;
}

// 3. Golden generators of the running family, then agreement of the
// recursive and path-sum constructions over a grading sample.
bool criterion_universal(std::string& details) {
  const UniversalFamily F = universal_generators(MonomialIdeal({11, 8, 4, 1, 1, 1, 1}),
                                                 Grading(1, 2));
  const std::vector<std::string> golden = {
      "x^8*y + c(1,1)*x^10",
      "x^4*y^2 + (c(1,1)+c(2,1))*x^6*y + (c(2,1)*c(1,1)+c(2,2))*x^8",
      "x*y^3 + (c(1,1)+c(2,1)+c(3,1))*x^3*y^2 + "
      "(c(2,1)*c(1,1)+c(2,2)+c(3,1)*c(1,1)+c(3,1)*c(2,1)+c(3,2))*x^5*y + "
      "(c(3,1)*c(2,1)*c(1,1)+c(3,1)*c(2,2)+c(3,2)*c(1,1))*x^7"};
  for (int i = 1; i <= 3; ++i) {
    if (to_string(F.gens[i], F.vars) != golden[i - 1]) {
      details = "generator " + std::to_string(i) + " is " + to_string(F.gens[i], F.vars);
      return false;
    }
  }

  const std::vector<Grading> gradings = {Grading(1, 1), Grading(1, 2), Grading(2, 3),
                                         Grading(1, 3)};
  int families = 0;
  for (int N = 1; N <= 8; ++N)
    for (const auto& M : enumerate_ideals(N))
      for (const auto& g : gradings) {
        if (!(universal_generators(M, g) == universal_generators_pathsum(M, g))) {
          details = "constructions disagree at [" + to_string(M) + "], " + to_string(g);
          return false;
        }
        ++families;
      }
  details = "3 golden generators; " + std::to_string(families) +
            " families agree across both constructions";
  return true;
}

// 4. The degree-4 coefficient matrix of [6,4,2,1] and its bar quotient,
// entry for entry.
bool criterion_macaulay(std::string& details) {
  const MacaulayMatrix R = macaulay_matrix(MonomialIdeal({6, 4, 2, 1}), Grading(1, 1), 4);
  // Rows x^4, x^3y, x^2y^2, xy^3, y^4; columns x^2y^2, xy^3, y^4.
  const std::vector<std::vector<std::string>> golden = {
      {"c(2,1)*c(1,1)+c(2,2)", "c(3,2)*c(1,1)", "c(4,3)*c(1,1)"},
      {"c(1,1)+c(2,1)", "c(2,1)*c(1,1)+c(2,2)+c(3,2)", "c(3,2)*c(1,1)+c(4,3)"},
      {"1", "c(1,1)+c(2,1)", "c(2,1)*c(1,1)+c(2,2)+c(3,2)"},
      {"0", "1", "c(1,1)+c(2,1)"},
      {"0", "0", "1"}};
  const std::vector<std::vector<std::string>> bar_golden = {
      {"c(2,1)*c(1,1)+c(2,2)", "0", "0"},
      {"c(1,1)+c(2,1)", "c(2,1)*c(1,1)+c(2,2)", "0"},
      {"1", "c(1,1)+c(2,1)", "c(2,1)*c(1,1)+c(2,2)"},
      {"0", "1", "c(1,1)+c(2,1)"},
      {"0", "0", "1"}};
  if (R.rows.size() != 5 || R.n0() != 3) {
    details = "unexpected shape " + std::to_string(R.rows.size()) + "x" + std::to_string(R.n0());
    return false;
  }
  const MacaulayMatrix B = bar_quotient(R);
  for (int r = 0; r < 5; ++r)
    for (int c = 0; c < 3; ++c) {
      if (R.entries[r][c].to_string(R.vars) != golden[r][c]) {
        details = "R[" + std::to_string(r) + "][" + std::to_string(c) + "] = " +
                  R.entries[r][c].to_string(R.vars);
        return false;
      }
      if (B.entries[r][c].to_string(B.vars) != bar_golden[r][c]) {
        details = "bar R[" + std::to_string(r) + "][" + std::to_string(c) + "] = " +
                  B.entries[r][c].to_string(B.vars);
        return false;
      }
    }
  details = "30 entries match across R and bar R";
  return true;
}

// 5. Every maximal minor of every nontrivial degree slice is a nonzero
// polynomial, with the direct-path certificate in the bar quotient.
bool criterion_minors(std::string& details) {
  const Grading std11(1, 1);
  std::uint64_t minors = 0;
  int slices = 0;
  for (const auto& fib : standard_fibers(8)) {
    const MonomialIdeal& M = fib.ideals[extreme_indices(fib.ideals, std11).first];
    for (int d = 0; d <= fib.hf.dmax(); ++d) {
      if (fib.hf(d) <= 0 || fib.hf(d) >= d + 1) continue;
      const MinorReport rep = verify_minors_nonzero(M, d);
      minors += rep.minor_count;
      ++slices;
      if (!rep.all_nonzero || !rep.all_certified) {
        details = "failure at [" + to_string(M) + "], degree " + std::to_string(d);
        return false;
      }
    }
  }
  std::ostringstream os;
  os << slices << " degree slices, " << minors << " minors: all nonzero, all certified";
  details = os.str();
  return true;
}

// 6. Random points give the uniform matroid in every degree, three seeds,
// one automatic resample per (fiber, seed) before declaring failure.
bool criterion_generic(std::string& details) {
  const Grading std11(1, 1);
  const FieldSpec field = FieldSpec::prime(32003);
  const auto fibers = standard_fibers(8);
  int fingerprints = 0, resamples = 0;
  for (const std::uint64_t seed : {1, 2, 3}) {
    std::mt19937_64 rng(seed);
    for (const auto& fib : fibers) {
      const MonomialIdeal& M = fib.ideals[extreme_indices(fib.ideals, std11).first];
      const VarTable vars = VarTable::for_ideal(M, std11);
      bool uniform = false;
      for (int attempt = 0; attempt < 2 && !uniform; ++attempt) {
        resamples += attempt;
        const SpecializedIdeal J =
            specialize_ideal(M, std11, sample_point(vars.size(), field, rng), field);
        uniform = true;
        for (int d = 0; d <= fib.hf.dmax() && uniform; ++d) {
          const Matroid m = matroid_of_degree(J, d);
          uniform = m.is_uniform() && m.rank() == fib.hf(d) && m.size() == d + 1;
        }
      }
      if (!uniform) {
        details = "non-uniform fingerprint at [" + to_string(M) + "], seed " +
                  std::to_string(seed) + " (after resampling)";
        return false;
      }
      ++fingerprints;
    }
  }
  details = std::to_string(fingerprints) + " (fiber, seed) fingerprints uniform, " +
            std::to_string(resamples) + " resamples";
  return true;
}

// 7. Under the (2,3)-grading the fingerprint degenerates: forced loops and
// coloops in one family, and a rank-2 non-uniform matroid without either in
// another. Checked at an explicit rational point and a random prime point.
bool criterion_nonstandard(std::string& details) {
  const Grading g(2, 3);
  const FieldSpec qq = FieldSpec::rationals();
  const FieldSpec gf = FieldSpec::prime(32003);

  {
    const MonomialIdeal M({7, 1, 1, 1});
    const SpecializedIdeal J = specialize_ideal(M, g, {FieldScalar::rational(1)}, qq);

    const Matroid m12 = matroid_of_degree(J, 12);
    const std::vector<Monomial> g12 = {{6, 0}, {3, 2}, {0, 4}};
    if (m12.ground() != g12 || m12.circuits() != masks_of(g12, {{{3, 2}}, {{6, 0}, {0, 4}}}) ||
        m12.loops() != std::vector<Monomial>{{3, 2}} || m12.is_uniform()) {
      details = "degree-12 matroid of [7,1,1,1] mismatches";
      return false;
    }

    const Matroid m8 = matroid_of_degree(J, 8);
    const std::vector<Monomial> g8 = {{4, 0}, {1, 2}};
    if (m8.ground() != g8 || m8.circuits() != masks_of(g8, {{{1, 2}}}) ||
        m8.coloops() != std::vector<Monomial>{{4, 0}} || m8.is_uniform()) {
      details = "degree-8 matroid of [7,1,1,1] mismatches";
      return false;
    }
  }

  {
    const MonomialIdeal M({10, 7, 7, 2, 2, 1});
    if (!(positive_arrows(M, g) == std::vector<Arrow>{{2, 1}, {4, 2}, {4, 3}})) {
      details = "arrow set of [10,7,7,2,2,1] mismatches";
      return false;
    }
    const std::vector<FieldScalar> explicit_point = {
        FieldScalar::rational(1), FieldScalar::rational(2), FieldScalar::rational(3)};
    const SpecializedIdeal Jq = specialize_ideal(M, g, explicit_point, qq);
    std::mt19937_64 rng(7);
    const SpecializedIdeal Jp = specialize_ideal(M, g, sample_point(3, gf, rng), gf);

    const std::vector<Monomial> g18 = {{9, 0}, {6, 2}, {3, 4}, {0, 6}};
    const auto circuits =
        masks_of(g18, {{{6, 2}, {3, 4}}, {{9, 0}, {3, 4}, {0, 6}}, {{9, 0}, {6, 2}, {0, 6}}});
    for (const SpecializedIdeal* J : {&Jq, &Jp}) {
      const Matroid m18 = matroid_of_degree(*J, 18);
      if (m18.ground() != g18 || m18.rank() != 2 || m18.circuits() != circuits ||
          !m18.loops().empty() || !m18.coloops().empty() || m18.is_uniform()) {
        details = "degree-18 matroid of [10,7,7,2,2,1] mismatches over " + J->field.name();
        return false;
      }
    }
  }
  details = "both degenerate fingerprints match at explicit and random points";
  return true;
}

// 8. Every spine edge up to colength 6 is realized by a sampled point whose
// two initial ideals are recomputed from scratch and hit both endpoints.
bool criterion_edge_probe(std::string& details) {
  const FieldSpec field = FieldSpec::prime(32003);
  int probes = 0, worst_trial = 0;
  for (int N = 2; N <= 6; ++N) {
    const SpineGraph G = spine_graph(N);
    for (const auto& e : G.edges) {
      const std::set<std::vector<int>> endpoints = {G.vertices[e.u].partition(),
                                                    G.vertices[e.v].partition()};
      for (const auto& w : e.witnesses) {
        const auto probe = edge_probe(w.hf, w.grading, field, 10, 12345);
        if (!probe) {
          details = "no witness in 10 trials: edge {" + to_string(G.vertices[e.u]) + "},{" +
                    to_string(G.vertices[e.v]) + "} under " + to_string(w.grading);
          return false;
        }
        const SpecializedIdeal J = specialize_ideal(probe->m_minus, w.grading, probe->point, field);
        const std::set<std::vector<int>> got = {
            initial_ideal(J, MonomialOrder::XBeforeY).partition(),
            initial_ideal(J, MonomialOrder::YBeforeX).partition()};
        if (got != endpoints) {
          details = "re-verification mismatch on edge {" + to_string(G.vertices[e.u]) + "},{" +
                    to_string(G.vertices[e.v]) + "} under " + to_string(w.grading);
          return false;
        }
        ++probes;
        worst_trial = std::max(worst_trial, probe->trial);
      }
    }
  }
  details = std::to_string(probes) + " edge witnesses realized, worst trial index " +
            std::to_string(worst_trial);
  return true;
}

// 9. Specialization is flat: the Hilbert function survives substitution at
// 100 random points on every cell.
bool criterion_flatness(std::string& details) {
  const FieldSpec field = FieldSpec::prime(32003);
  std::mt19937_64 rng(9001);
  int cells = 0;
  for (int N = 1; N <= 6; ++N)
    for (const auto& M : enumerate_ideals(N))
      for (int a = 1; a <= N; ++a)
        for (int b = 1; b <= N; ++b) {
          if (std::gcd(a, b) != 1) continue;
          const Grading g(a, b);
          const HilbertFunction h = graded_hilbert_function(M, g);
          const VarTable vars = VarTable::for_ideal(M, g);
          for (int t = 0; t < 100; ++t) {
            const SpecializedIdeal J =
                specialize_ideal(M, g, sample_point(vars.size(), field, rng), field);
            if (!(specialized_hilbert_function(J) == h)) {
              details = "Hilbert function changed at [" + to_string(M) + "], " + to_string(g) +
                        ", trial " + std::to_string(t + 1);
              return false;
            }
          }
          ++cells;
        }
  details = std::to_string(cells) + " cells x 100 points keep their Hilbert function";
  return true;
}

// 10. The (1,2)-graded diamond fiber, then the partial-order axioms on
// every fiber of a grading sample.
bool criterion_poset(std::string& details) {
  const DominancePoset P = poset_hasse(HilbertFunction({1, 1, 2, 1, 1}), Grading(1, 2));
  std::vector<std::vector<int>> elems;
  for (const auto& M : P.elements) elems.push_back(M.partition());
  const std::vector<std::vector<int>> want_elems = {{5, 1}, {4, 1, 1}, {3, 3}, {3, 2, 1}};
  if (elems != want_elems) {
    details = "fiber has " + std::to_string(elems.size()) + " elements";
    return false;
  }
  const std::set<std::pair<int, int>> rel(P.relation.begin(), P.relation.end());
  const std::set<std::pair<int, int>> want_rel = {{0, 1}, {0, 2}, {0, 3}, {1, 3}, {2, 3}};
  if (P.min_index != 0 || P.max_index != 3 || rel != want_rel || P.covers.size() != 4) {
    details = "diamond structure mismatches";
    return false;
  }

  const std::vector<Grading> gradings = {Grading(1, 1), Grading(1, 2), Grading(2, 3),
                                         Grading(1, 3)};
  long fibers = 0;
  for (int N = 1; N <= 8; ++N) {
    const auto ideals = enumerate_ideals(N);
    for (const auto& g : gradings) {
      std::map<HilbertFunction, std::vector<MonomialIdeal>> grouped;
      for (const auto& M : ideals) grouped[graded_hilbert_function(M, g)].push_back(M);
      for (const auto& [hf, fib] : grouped) {
        const int n = static_cast<int>(fib.size());
        std::vector<std::vector<bool>> leq(n, std::vector<bool>(n));
        for (int u = 0; u < n; ++u)
          for (int v = 0; v < n; ++v) leq[u][v] = dominance_leq(fib[u], fib[v], g);
        for (int u = 0; u < n; ++u) {
          if (!leq[u][u]) {
            details = "reflexivity fails at [" + to_string(fib[u]) + "], " + to_string(g);
            return false;
          }
          for (int v = 0; v < n; ++v) {
            if (u != v && leq[u][v] && leq[v][u]) {
              details = "antisymmetry fails at [" + to_string(fib[u]) + "],[" +
                        to_string(fib[v]) + "], " + to_string(g);
              return false;
            }
            for (int w = 0; w < n; ++w)
              if (leq[u][v] && leq[v][w] && !leq[u][w]) {
                details = "transitivity fails within a fiber under " + to_string(g);
                return false;
              }
          }
        }
        ++fibers;
      }
    }
  }
  details = "diamond fiber exact; axioms hold on " + std::to_string(fibers) + " fibers";
  return true;
}

struct Criterion {
  int id;
  const char* name;
  bool (*fn)(std::string&);
};

constexpr Criterion kCriteria[] = {
    {1, "spine of colength 4", criterion_spine},
    {2, "positive arrows of the running staircase", criterion_arrows},
    {3, "universal family generators, two constructions", criterion_universal},
    {4, "degree-4 coefficient matrix and bar quotient", criterion_macaulay},
    {5, "all maximal minors nonzero, certified (N <= 8)", criterion_minors},
    {6, "uniform matroids at random points, 3 seeds (N <= 8)", criterion_generic},
    {7, "degenerate matroids under the (2,3)-grading", criterion_nonstandard},
    {8, "spine edges realized by sampled points (N <= 6)", criterion_edge_probe},
    {9, "specialization preserves Hilbert functions (N <= 6)", criterion_flatness},
    {10, "dominance diamond and partial-order axioms (N <= 8)", criterion_poset},
};

}  // namespace

CriterionResult run_criterion(int id) {
  for (const auto& c : kCriteria) {
    if (c.id != id) continue;
    CriterionResult r{c.id, c.name, false, "", 0.0};
    const auto t0 = std::chrono::steady_clock::now();
    try {
      r.pass = c.fn(r.details);
    } catch (const std::exception& ex) {
      r.pass = false;
      r.details = std::string("exception: ") + ex.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
  }
  throw input_error("unknown criterion id " + std::to_string(id));
}

std::vector<CriterionResult> run_all_criteria() {
  std::vector<CriterionResult> out;
  for (const auto& c : kCriteria) out.push_back(run_criterion(c.id));
  return out;
}

std::string to_string(const CriterionResult& r) {
  std::ostringstream os;
  os << (r.pass ? "PASS" : "FAIL") << "  " << std::setw(2) << r.id << "  " << r.name << " — "
     << r.details << "  (" << std::fixed << std::setprecision(2) << r.seconds << "s)";
  return os.str();
}

}  // namespace hilbspine
