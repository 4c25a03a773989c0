#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <vector>

#include "hilbspine/field.hpp"
#include "hilbspine/matroid.hpp"
#include "hilbspine/universal.hpp"

namespace hilbspine {

// The RNG used for every randomized operation; its name is echoed in CLI
// reports for reproducibility.
inline constexpr const char* kRngName = "mt19937_64";

// nvars independent draws: uniform residues for GF(p), integers in
// [-rational_bound, rational_bound] for QQ (modulo reduction; the bias at
// these moduli is irrelevant for probing).
std::vector<FieldScalar> sample_point(int nvars, const FieldSpec& field, std::mt19937_64& rng,
                                      int rational_bound = 10);

// The ideal J obtained from the universal family of (M, g) by substituting a
// field value for every arrow variable c_i^l. Generators are stored as
// carrier -> value maps with the leading carrier m_i at value 1.
struct SpecializedIdeal {
  MonomialIdeal ideal;  // the monomial fiber point M the family sits over
  Grading grading;
  VarTable vars;
  FieldSpec field;
  std::vector<FieldScalar> point;  // one value per variable of `vars`
  std::vector<std::map<Monomial, FieldScalar, LexXYLess>> gens;  // specialized f_0..f_e
};

// point must assign a value to every positive-arrow variable of (M, g).
SpecializedIdeal specialize_ideal(const MonomialIdeal& M, const Grading& g,
                                  const std::vector<FieldScalar>& point, const FieldSpec& field);

// h_J(d) = q_d - rank(degree-d coefficient matrix of all monomial multiples
// of the specialized generators), for 0 <= d <= dmax of M's Hilbert function.
// Flatness of the family makes this equal to M's graded Hilbert function;
// computed independently here so tests can assert that equality.
HilbertFunction specialized_hilbert_function(const SpecializedIdeal& J);

// The initial monomial ideal of J under lex with x < y (XBeforeY) or the
// opposite order (YBeforeX), assembled from per-degree pivot monomials of the
// row-reduced degree slices; cross-degree consistency is asserted.
MonomialIdeal initial_ideal(const SpecializedIdeal& J, MonomialOrder order);

// The matroid of the degree-d slice: ground = all monomials of degree d,
// rank h(d); E is a basis iff the Macaulay-matrix rows indexed by the
// complement of E have full rank q_d - h(d) after substituting the point.
Matroid matroid_of_degree(const SpecializedIdeal& J, int d);

// d -> matroid for every 0 <= d <= dmax: the tropical fingerprint of J.
std::map<int, Matroid> tropical_fingerprint(const SpecializedIdeal& J);

struct ProbeWitness {
  MonomialIdeal m_minus;
  MonomialIdeal m_plus;
  std::vector<FieldScalar> point;
  int trial = 0;  // 1-based index of the successful trial
};

// Randomized edge certificate: sample `trials` points on the cell of the
// fiber's lex-least ideal (uniform residues for GF(p); integers in
// [-rational_bound, rational_bound] for QQ) with the named RNG mt19937_64,
// and return the first point whose initial ideals in the two orders are
// exactly the fiber's two extremes. Requires a fiber of >= 2 ideals.
std::optional<ProbeWitness> edge_probe(const HilbertFunction& h, const Grading& g,
                                       const FieldSpec& field, int trials, std::uint64_t seed,
                                       int rational_bound = 10);

}  // namespace hilbspine
