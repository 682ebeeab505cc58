#pragma once

#include <complex>
#include <vector>

#include "qcg/legop.hpp"

namespace qcg {

// Choice of the diagonal normalization in front of the Gauss product.
// zeta_power is the scheme that works in every rank; trivial (plain
// identity) is only consistent in rank one and is rejected otherwise.
enum class DiagonalChoice { zeta_power, trivial };

LegOp gauge_m0(const RepSpace& v, DiagonalChoice choice = DiagonalChoice::zeta_power);
LegOp gauge_m0_inverse(const RepSpace& v, DiagonalChoice choice = DiagonalChoice::zeta_power);

// m-th raising word: the ordered product over j = 1..n-m+1 of inverse-base
// q-exponentials of -nu_{j+m}^(-1) q^(zeta^(j-1)) e_(j). m = 1 is the base
// word; raising m acts as the index-shift morphism on the generators.
LegOp gauge_c_plus(const RepSpace& v, int m = 1);

// Lowering word, defined through its inverse: the ordered product over
// k = 1..n of inverse-base q-exponentials of
// nu_{k+1} q^(-zeta^(k-1) - h_(k) - 1) f_(k).
LegOp gauge_c_minus_inverse(const RepSpace& v);
LegOp gauge_c_minus(const RepSpace& v);

// Ascending product of the raising words, base word leftmost.
LegOp gauge_m_plus(const RepSpace& v);

// Unique unipotent lower-triangular M with c_minus B M = M B, where B is
// the dynamical diagonal. Solved level by level in the lowering height;
// each level divides by 1 - b_row/b_col, and a vanishing divisor raises
// DegenerateBlock. Equals the limit of the descending product of
// B-conjugates of c_minus.
LegOp solve_m_minus(const RepSpace& v);

// Numeric partial product prod_{k=1..depth} B^(-k) c_minus^(-1) B^k at a
// sample point, ascending k leftmost. reversed multiplies the factors in
// the opposite order (diagnostic; converges to the wrong operator).
std::vector<std::vector<std::complex<double>>>
truncated_m_minus(const RepSpace& v, int depth,
                  const std::vector<std::complex<double>>& point,
                  bool reversed = false);

// Assembled coboundary gauge m0 * m_minus^(-1) * m_plus and its inverse.
LegOp gauge_m(const RepSpace& v, DiagonalChoice choice = DiagonalChoice::zeta_power);
LegOp gauge_m_inverse(const RepSpace& v,
                      DiagonalChoice choice = DiagonalChoice::zeta_power);

// Closed forms on the fundamental module. Coefficients are elementary
// symmetric (m_plus), complete homogeneous (its inverse), and geometric
// blocks with Cauchy-type denominators (m_minus and its inverse). The full
// inverse is a Vandermonde matrix sandwiched between diagonals.
LegOp fund_m_plus(const Session& s);
LegOp fund_m_plus_inverse(const Session& s);
LegOp fund_m_minus(const Session& s);
LegOp fund_m_minus_inverse(const Session& s);
LegOp fund_m_inverse(const Session& s);

} // namespace qcg
