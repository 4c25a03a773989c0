#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hilbspine/det.hpp"
#include "hilbspine/universal.hpp"

namespace hilbspine {

// The degree-d coefficient matrix of the universal family: rows are all
// monomials of g-degree d (ascending lex), columns the degree-d monomials of
// M (ascending lex). Column m holds the coefficients of
// g_m = (m / m_{j^-(m)}) f_{j^-(m)}; by the entry law,
//   R[m', m] = sum of c_P over paths P from m_{j^-(m)} with l(P) = l
// when m' = m r^l (and 0 when m' is not an r-shift of m or l < 0).
// Upper triangular: entries at rows lex-greater than the column vanish, and
// R[m, m] = 1.
struct MacaulayMatrix {
  MonomialIdeal ideal;
  Grading grading;
  int degree = 0;
  VarTable vars;
  std::vector<Monomial> rows;
  std::vector<Monomial> cols;
  PolyMatrix entries;  // [row][col]
  bool barred = false;

  int n0() const { return static_cast<int>(cols.size()); }
};

MacaulayMatrix macaulay_matrix(const MonomialIdeal& M, const Grading& g, int d);

// The bar quotient for the standard grading on a lex-least M (T^-(M) empty):
// kill every variable c_i^l with i > j^-(m*), m* the lex-least column. The
// result is lower triangular along the (m r^{l0}, m) diagonal, l0 = j^-(m*),
// with equal nonzero entries down each diagonal.
// Requires: g = (1,1), M lex-least, at least one column.
MacaulayMatrix bar_quotient(const MacaulayMatrix& R);

// Per-minor record of verify_minors_nonzero.
struct MinorRecord {
  std::vector<int> rows;              // row indices of the maximal submatrix
  bool nonzero = false;               // det(R') != 0
  bool bar_nonzero = false;           // det(bar R') != 0
  bool q_coefficient_one = false;     // Q has coefficient exactly 1 in det(bar R')
  bool diagonal_leads_with_q = false; // Q is the lex-leading term (coeff 1) of prod_j barR'_{j,j}
  std::string q;                      // the direct-path product, as text
  std::string leading_monomial;       // lex-leading monomial of det(R')
};

struct MinorReport {
  MonomialIdeal ideal;
  int degree = 0;
  std::uint64_t minor_count = 0;
  bool all_nonzero = false;
  bool all_certified = false;  // q_coefficient_one && diagonal_leads_with_q everywhere
  std::vector<MinorRecord> minors;
};

// Check every maximal (n0 x n0) minor of the degree-d Macaulay matrix of a
// lex-least M under the standard grading: each must be a nonzero polynomial,
// and in the bar quotient the direct-path product Q must appear in the minor
// with coefficient exactly 1 and lead the diagonal product. Requires
// g = (1,1) implicitly (standard grading), M lex-least, h(d) < d+1.
// Trips guard_error when C(d+1, n0) exceeds max_minors.
MinorReport verify_minors_nonzero(const MonomialIdeal& M, int d,
                                  std::uint64_t max_minors = 1000000);

// The certificate monomial Q for one maximal submatrix of bar R: the product
// over columns j of c_{p_{k, l_jj}} where k = j^-(m*) and l_jj is the shift
// length at diagonal position (row_j, col_j). Throws if a needed direct path
// does not exist. Returns the exponent vector of Q in R.vars.
std::vector<int> direct_path_certificate(const MacaulayMatrix& barR,
                                         const std::vector<int>& row_choice);

// Text dump with row/column monomial labels (kbordermatrix-like).
std::string to_bordered_string(const MacaulayMatrix& R);

}  // namespace hilbspine
