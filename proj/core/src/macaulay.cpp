#include "hilbspine/macaulay.hpp"

#include <algorithm>

#include "hilbspine/errors.hpp"

namespace hilbspine {

MacaulayMatrix macaulay_matrix(const MonomialIdeal& M, const Grading& g, int d) {
  if (d < 0) throw input_error("macaulay_matrix: degree must be >= 0");
  PathSums sums(M, g);
  MacaulayMatrix R{M, g, d, sums.vars(), monomials_of_degree(g, d), {}, {}};
  for (const Monomial& m : R.rows)
    if (M.contains(m)) R.cols.push_back(m);

  const int nvars = R.vars.size();
  R.entries.assign(R.rows.size(), std::vector<CPolynomial>(R.cols.size(), CPolynomial(nvars)));
  for (size_t c = 0; c < R.cols.size(); ++c) {
    const int jm = M.j_minus(R.cols[c]);
    for (size_t r = 0; r < R.rows.size(); ++r) {
      const auto ell = g.shift_exponent(R.cols[c], R.rows[r]);
      if (!ell || *ell < 0) continue;  // not an r-shift, or a lex-greater row
      R.entries[r][c] = sums(jm, *ell);
    }
  }
  return R;
}

namespace {
// j^-(m*) for the lex-least column m* of R; this is the index l0 such that
// the bar matrix is lower triangular along the (m r^{l0}, m) diagonal.
int bar_pivot_index(const MacaulayMatrix& R) {
  return R.ideal.j_minus(R.cols.front());
}
}  // namespace

MacaulayMatrix bar_quotient(const MacaulayMatrix& R) {
  if (!R.grading.is_standard())
    throw input_error("bar_quotient requires the standard grading (1,1)");
  if (R.cols.empty()) throw input_error("bar_quotient requires at least one column");
  if (R.barred) throw input_error("bar_quotient: matrix is already barred");
  if (!negative_arrows(R.ideal, R.grading).empty())
    throw input_error("bar_quotient requires a lex-least ideal (no negative arrows)");

  // Y = { c_i^l : i > j^-(m*) }; the quotient sets them to zero, i.e. drops
  // every term containing one.
  const int l0 = bar_pivot_index(R);
  MacaulayMatrix B = R;
  B.barred = true;
  for (auto& row : B.entries)
    for (auto& p : row) {
      CPolynomial kept(p.nvars());
      for (const auto& [e, c] : p.terms()) {
        bool in_y = false;
        for (int v = 0; v < p.nvars() && !in_y; ++v)
          in_y = e[v] != 0 && R.vars.arrow(v).index > l0;
        if (!in_y) kept += CPolynomial::term(p.nvars(), e, c);
      }
      p = std::move(kept);
    }
  return B;
}

std::vector<int> direct_path_certificate(const MacaulayMatrix& barR,
                                         const std::vector<int>& row_choice) {
  if (!barR.barred) throw input_error("direct_path_certificate expects a barred matrix");
  if (row_choice.size() != barR.cols.size())
    throw input_error("direct_path_certificate: need one row per column");
  const int k = barR.ideal.j_minus(barR.cols.front());
  std::vector<int> q(barR.vars.size(), 0);
  for (size_t j = 0; j < barR.cols.size(); ++j) {
    const auto ell = barR.grading.shift_exponent(barR.cols[j], barR.rows[row_choice[j]]);
    if (!ell || *ell < 0)
      throw input_error("direct_path_certificate: diagonal entry off the shift orbit");
    const auto p = direct_path(barR.ideal, barR.grading, k, *ell);
    if (!p)
      throw input_error("direct_path_certificate: missing direct path of length " +
                        std::to_string(*ell));
    for (const Arrow& a : p->steps) {
      const auto v = barR.vars.index_of(a);
      if (!v) throw std::logic_error("direct path used a non-arrow step");
      q[*v] += 1;
    }
  }
  return q;
}

MinorReport verify_minors_nonzero(const MonomialIdeal& M, int d, std::uint64_t max_minors) {
  const Grading g(1, 1);
  if (!negative_arrows(M, g).empty())
    throw input_error("verify_minors_nonzero requires a lex-least ideal");
  MacaulayMatrix R = macaulay_matrix(M, g, d);
  const int q = static_cast<int>(R.rows.size());
  const int n0 = R.n0();
  if (n0 == 0)
    throw input_error("verify_minors_nonzero: no columns in degree " + std::to_string(d));

  // C(q, n0) with overflow care; q <= d+1 stays small in practice but the
  // guard must trip before any allocation explodes.
  std::uint64_t count = 1;
  for (int t = 1; t <= n0; ++t) {
    count = count * static_cast<std::uint64_t>(q - n0 + t);
    count /= static_cast<std::uint64_t>(t);
    if (count > max_minors * 64ULL) break;  // already hopeless; avoid overflow
  }
  if (count > max_minors)
    throw guard_error("verify_minors_nonzero: " + std::to_string(count) +
                      " maximal minors exceed the cap " + std::to_string(max_minors) +
                      " (override with HILB_SPINE_MAX_MINORS)");

  MinorReport report{M, d, count, true, true, {}};
  const MacaulayMatrix B = bar_quotient(R);
  MinorExpander full(R.entries);
  MinorExpander barred(B.entries);
  const std::vector<int> weights = [&] {
    std::vector<int> w(R.vars.size());
    for (int v = 0; v < R.vars.size(); ++v) w[v] = R.vars.weight(v);
    return w;
  }();

  // Enumerate row subsets of size n0 in lexicographic order.
  std::vector<int> rows(n0);
  for (int t = 0; t < n0; ++t) rows[t] = t;
  while (true) {
    MinorRecord rec;
    rec.rows = rows;
    const CPolynomial& det = full.det(rows);
    const CPolynomial& bar_det = barred.det(rows);
    rec.nonzero = !det.is_zero();
    rec.bar_nonzero = !bar_det.is_zero();
    if (rec.nonzero) rec.leading_monomial = monomial_text(det.leading_exponents(), R.vars);
    // Certificate: Q from the direct paths of the diagonal shift lengths.
    const std::vector<int> qexp = direct_path_certificate(B, rows);
    rec.q = monomial_text(qexp, R.vars);
    rec.q_coefficient_one = bar_det.coefficient_of(qexp) == 1;

    // Diagonal product and its lex-leading term.
    CPolynomial diag = CPolynomial::constant(R.vars.size(), 1);
    for (int j = 0; j < n0; ++j) diag = diag * B.entries[rows[j]][j];
    rec.diagonal_leads_with_q =
        !diag.is_zero() && diag.leading_exponents() == qexp && diag.leading_coefficient() == 1;

    // Homogeneity sanity: every nonzero minor of R is weighted-homogeneous.
    if (rec.nonzero && !det.weighted_degree(weights))
      throw std::logic_error("verify_minors_nonzero: inhomogeneous minor");

    report.all_nonzero = report.all_nonzero && rec.nonzero && rec.bar_nonzero;
    report.all_certified =
        report.all_certified && rec.q_coefficient_one && rec.diagonal_leads_with_q;
    report.minors.push_back(std::move(rec));

    // next combination
    int t = n0 - 1;
    while (t >= 0 && rows[t] == q - n0 + t) --t;
    if (t < 0) break;
    ++rows[t];
    for (int s = t + 1; s < n0; ++s) rows[s] = rows[s - 1] + 1;
  }
  return report;
}

std::string to_bordered_string(const MacaulayMatrix& R) {
  const size_t nr = R.rows.size();
  const size_t nc = R.cols.size();
  std::vector<std::vector<std::string>> cells(nr + 1, std::vector<std::string>(nc + 1));
  for (size_t c = 0; c < nc; ++c) cells[0][c + 1] = to_string(R.cols[c]);
  for (size_t r = 0; r < nr; ++r) {
    cells[r + 1][0] = to_string(R.rows[r]);
    for (size_t c = 0; c < nc; ++c) cells[r + 1][c + 1] = R.entries[r][c].to_string(R.vars);
  }
  std::vector<size_t> width(nc + 1, 0);
  for (const auto& row : cells)
    for (size_t c = 0; c <= nc; ++c) width[c] = std::max(width[c], row[c].size());
  std::string out;
  for (const auto& row : cells) {
    for (size_t c = 0; c <= nc; ++c) {
      out += row[c];
      if (c < nc) out += std::string(width[c] - row[c].size() + 2, ' ');
    }
    while (!out.empty() && out.back() == ' ') out.pop_back();
    out += "\n";
  }
  return out;
}

}  // namespace hilbspine
