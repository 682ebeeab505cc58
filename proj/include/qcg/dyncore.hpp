#pragma once

#include <complex>
#include <stdexcept>
#include <vector>

#include "qcg/legop.hpp"
#include "qcg/repspace.hpp"
#include "qcg/rootvec.hpp"

namespace qcg {

struct DegenerateBlock : std::runtime_error {
    DegenerateBlock()
        : std::runtime_error("triangular solve hit an identically vanishing block denominator") {}
};

// diagonal dynamical Cartan element, raised to a rational power; the entry
// on a weight vector is a monomial in q and the nu variables
LegOp dyn_cartan(const RepSpace& v, const Rat& power);

// substitute the dynamical variables by their shift along the weight of one
// leg (1-based): nu_k picks up q^(2(zeta^(k) - zeta^(k-1)) (weight)). The
// operator must leave that leg's weight unchanged.
LegOp dyn_shift(const LegOp& op, int leg);

// unique solution of F B_2 = Rhat^-1 B_2 F with F - 1 strictly raising on
// leg 1 and strictly lowering on leg 2, by a triangular solve graded by how
// far leg 2 is lowered
LegOp solve_abrr(const RootVectors& rv, const RepSpace& a, const RepSpace& b);

// dynamical R-matrix F_21(x)^-1 R F_12(x)
LegOp dyn_R(const RootVectors& rv, const RepSpace& a, const RepSpace& b);

// closed forms on fundamental x fundamental
LegOp fund_dyn_F(const Session& s);
LegOp fund_dyn_R(const Session& s);

// numeric partial product prod_{k=0}^{depth} B_2^-(k+1) Rhat B_2^(k+1),
// evaluated entrywise at the given variable point
std::vector<std::vector<std::complex<double>>>
truncated_dyn_F(const RootVectors& rv, const RepSpace& a, const RepSpace& b,
                int depth, const std::vector<std::complex<double>>& point);

} // namespace qcg
