#include "hilbspine/specialized.hpp"

#include <algorithm>
#include <random>

#include "hilbspine/dominance.hpp"
#include "hilbspine/errors.hpp"
#include "hilbspine/macaulay.hpp"

namespace hilbspine {

std::vector<FieldScalar> sample_point(int nvars, const FieldSpec& field, std::mt19937_64& rng,
                                      int rational_bound) {
  if (rational_bound < 1) throw input_error("sample_point: rational bound must be >= 1");
  std::vector<FieldScalar> point;
  point.reserve(nvars);
  for (int v = 0; v < nvars; ++v) {
    if (field.kind == FieldSpec::Kind::Prime) {
      point.push_back(FieldScalar::make(field, BigInt(rng() % field.p)));
    } else {
      const std::uint64_t span = 2 * static_cast<std::uint64_t>(rational_bound) + 1;
      point.push_back(FieldScalar::make(
          field, BigInt(static_cast<std::int64_t>(rng() % span) - rational_bound)));
    }
  }
  return point;
}

SpecializedIdeal specialize_ideal(const MonomialIdeal& M, const Grading& g,
                                  const std::vector<FieldScalar>& point, const FieldSpec& field) {
  const UniversalFamily F = universal_generators_pathsum(M, g);
  if (static_cast<int>(point.size()) != F.vars.size())
    throw input_error("specialize_ideal: point must assign all " + std::to_string(F.vars.size()) +
                      " arrow variables");
  for (const auto& v : point)
    if (!(v.field() == field)) throw input_error("specialize_ideal: point/field mismatch");

  SpecializedIdeal J{M, g, F.vars, field, point, {}};
  J.gens.resize(F.gens.size());
  for (size_t i = 0; i < F.gens.size(); ++i)
    for (const auto& [m, c] : F.gens[i]) {
      FieldScalar v = evaluate(c, point, field);
      if (!v.is_zero()) J.gens[i].emplace(m, v);
    }
  return J;
}

namespace {
// Coefficient rows of all degree-d multiples u * f_i over the monomial basis
// `cols` (ascending lex), one row per (i, u).
std::vector<std::vector<FieldScalar>> degree_matrix(const SpecializedIdeal& J, int d,
                                                    const std::vector<Monomial>& cols) {
  std::map<Monomial, int, LexXYLess> col_index;
  for (size_t c = 0; c < cols.size(); ++c) col_index.emplace(cols[c], static_cast<int>(c));

  std::vector<std::vector<FieldScalar>> rows;
  const FieldScalar zero = FieldScalar::make(J.field, 0);
  for (size_t i = 0; i < J.gens.size(); ++i) {
    const int di = J.grading.degree(J.ideal.generators()[i]);
    if (d < di) continue;
    for (const Monomial& u : monomials_of_degree(J.grading, d - di)) {
      std::vector<FieldScalar> row(cols.size(), zero);
      for (const auto& [m, v] : J.gens[i]) row[col_index.at(u * m)] = v;
      rows.push_back(std::move(row));
    }
  }
  return rows;
}
}  // namespace

HilbertFunction specialized_hilbert_function(const SpecializedIdeal& J) {
  const int dmax = graded_hilbert_function(J.ideal, J.grading).dmax();
  std::vector<int> h(dmax + 1, 0);
  for (int d = 0; d <= dmax; ++d) {
    const auto cols = monomials_of_degree(J.grading, d);
    if (cols.empty()) continue;
    h[d] = static_cast<int>(cols.size()) - matrix_rank(degree_matrix(J, d, cols));
  }
  return HilbertFunction(std::move(h));
}

MonomialIdeal initial_ideal(const SpecializedIdeal& J, MonomialOrder order) {
  const int dmax = graded_hilbert_function(J.ideal, J.grading).dmax();

  // Gather the staircase (non-pivot monomials) degree by degree; beyond dmax
  // the slices are forced (h = 0 there by flatness, checked via rank).
  std::vector<Monomial> staircase;
  for (int d = 0; d <= dmax; ++d) {
    const auto cols = monomials_of_degree(J.grading, d);
    if (cols.empty()) continue;
    auto rows = degree_matrix(J, d, cols);
    // Scan columns descending in `order`: pivots are the initial monomials.
    std::vector<int> perm(cols.size());
    for (size_t k = 0; k < cols.size(); ++k) perm[k] = static_cast<int>(k);
    std::sort(perm.begin(), perm.end(),
              [&](int x, int y) { return order_less(order, cols[y], cols[x]); });
    const auto pivots = pivot_columns(std::move(rows), perm);
    std::vector<bool> is_pivot(cols.size(), false);
    for (int p : pivots) is_pivot[p] = true;
    for (size_t k = 0; k < cols.size(); ++k)
      if (!is_pivot[k]) staircase.push_back(cols[k]);
  }

  // Assemble a partition from the staircase set and assert consistency: the
  // set must be a Young diagram (initial ideals of homogeneous ideals are
  // monomial ideals).
  int max_j = -1;
  for (const Monomial& m : staircase) max_j = std::max(max_j, m.j);
  std::vector<int> rows_len(max_j + 1, 0);
  for (const Monomial& m : staircase) rows_len[m.j] = std::max(rows_len[m.j], m.i + 1);
  std::vector<std::vector<bool>> seen(max_j + 1);
  for (int j = 0; j <= max_j; ++j) seen[j].assign(rows_len[j], false);
  for (const Monomial& m : staircase) {
    if (seen[m.j][m.i]) throw std::logic_error("initial_ideal: duplicate staircase monomial");
    seen[m.j][m.i] = true;
  }
  for (int j = 0; j <= max_j; ++j) {
    for (int i = 0; i < rows_len[j]; ++i)
      if (!seen[j][i]) throw std::logic_error("initial_ideal: staircase has a gap in a row");
    if (j > 0 && rows_len[j] > rows_len[j - 1])
      throw std::logic_error("initial_ideal: staircase rows are not weakly decreasing");
  }
  MonomialIdeal result(std::move(rows_len));
  if (result.colength() != J.ideal.colength())
    throw std::logic_error("initial_ideal: staircase size differs from the colength");
  return result;
}

Matroid matroid_of_degree(const SpecializedIdeal& J, int d) {
  if (d < 0) throw input_error("matroid_of_degree: degree must be >= 0");
  const MacaulayMatrix R = macaulay_matrix(J.ideal, J.grading, d);
  const int q = static_cast<int>(R.rows.size());
  const int n0 = R.n0();

  // Substitute the point into the symbolic matrix once.
  std::vector<std::vector<FieldScalar>> num(q);
  for (int r = 0; r < q; ++r) {
    num[r].reserve(n0);
    for (int c = 0; c < n0; ++c) num[r].push_back(evaluate(R.entries[r][c], J.point, J.field));
  }

  // E independent iff deleting E's rows keeps full column rank n0; with
  // |E| <= h(d) = q - n0 this is the standard quotient-matroid criterion.
  const auto oracle = [&](std::uint32_t mask) {
    std::vector<std::vector<FieldScalar>> rows;
    rows.reserve(q);
    for (int r = 0; r < q; ++r)
      if (!(mask & (std::uint32_t{1} << r))) rows.push_back(num[r]);
    if (n0 == 0) return true;
    return matrix_rank(std::move(rows)) == n0;
  };
  return Matroid(R.rows, oracle);
}

std::map<int, Matroid> tropical_fingerprint(const SpecializedIdeal& J) {
  std::map<int, Matroid> out;
  const int dmax = graded_hilbert_function(J.ideal, J.grading).dmax();
  for (int d = 0; d <= dmax; ++d) {
    if (monomials_of_degree(J.grading, d).empty()) continue;
    out.emplace(d, matroid_of_degree(J, d));
  }
  return out;
}

std::optional<ProbeWitness> edge_probe(const HilbertFunction& h, const Grading& g,
                                       const FieldSpec& field, int trials, std::uint64_t seed,
                                       int rational_bound) {
  if (trials < 1) throw input_error("edge_probe: trials must be >= 1");
  if (rational_bound < 1) throw input_error("edge_probe: rational bound must be >= 1");
  const auto fiber = ideals_with_hf(h, g);
  if (fiber.size() < 2)
    throw input_error("edge_probe: fiber has " + std::to_string(fiber.size()) +
                      " ideal(s); an edge needs at least 2");
  auto [lo_idx, hi_idx] = extreme_indices(fiber, g);
  const MonomialIdeal& lo = fiber[lo_idx];
  const MonomialIdeal& hi = fiber[hi_idx];

  const VarTable vars = VarTable::for_ideal(lo, g);
  std::mt19937_64 rng(seed);
  for (int t = 1; t <= trials; ++t) {
    std::vector<FieldScalar> point = sample_point(vars.size(), field, rng, rational_bound);
    const SpecializedIdeal J = specialize_ideal(lo, g, point, field);
    // Soundness: both verifications recompute initial ideals from the raw
    // degree matrices; nothing is assumed about the cell.
    if (initial_ideal(J, MonomialOrder::XBeforeY) == lo &&
        initial_ideal(J, MonomialOrder::YBeforeX) == hi)
      return ProbeWitness{lo, hi, std::move(point), t};
  }
  return std::nullopt;
}

}  // namespace hilbspine
