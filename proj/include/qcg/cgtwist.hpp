#pragma once

#include <stdexcept>

#include "qcg/legop.hpp"
#include "qcg/rootvec.hpp"

namespace qcg {

struct HeckeViolation : std::runtime_error {
    HeckeViolation() : std::runtime_error("braided matrix fails the quadratic Hecke relation") {}
};

// Exponent of zeta^(i) (x) zeta^(j) in the k-th diagonal twist ratio, as an
// integer table. Nonzero only for 1 <= k <= n-1, and then +1 on j = i+k and
// -1 on j = i+k+1 with j allowed to reach n.
int twist_w_exponent(int n, int k, int i, int j);

// diagonal factor q^{sum_{i=1}^{n-k} zeta^(i) (x) zeta^(i+k)}; identity for k >= n
LegOp twist_s(const RepSpace& a, const RepSpace& b, int k);

// ratio of consecutive diagonal factors, assembled from the integer table
LegOp twist_w(const RepSpace& a, const RepSpace& b, int k);

// Unipotent half of the R-matrix with every raising root word shifted k-m
// steps down the Dynkin diagram and every lowering root word shifted m steps
// up; factors pushed off the diagram are dropped. The result does not depend
// on how the total shift k splits between the legs (0 <= m <= k).
LegOp shifted_unipotent_R(const RootVectors& rv, const RepSpace& a, const RepSpace& b,
                          int k, int m = 0);

// Three-leg variant: raising words on leg 1 shifted k down, lowering words on
// leg 3 shifted m up, and the middle leg carrying q^{middle_sign * h_root}
// for each root factor (the weight picked up when the crossing factor is
// pulled through the Cartan half on legs 23, resp. 12).
LegOp shifted_unipotent_R_mid(const RootVectors& rv, const RepSpace& a, const RepSpace& b,
                              const RepSpace& c, int k, int m, int middle_sign);

// k-th twist factor: diagonal ratio times shifted unipotent half
LegOp twist_factor(const RootVectors& rv, const RepSpace& a, const RepSpace& b, int k);

// full twist, ordered product of the factors k = 1 .. n-1 (identity for n = 1)
LegOp cg_twist(const RootVectors& rv, const RepSpace& a, const RepSpace& b);

// twisted R-matrix J21^-1 R J12
LegOp cg_R(const RootVectors& rv, const RepSpace& a, const RepSpace& b);

// closed form of the twisted R-matrix on fund (x) fund: a diagonal
// conjugation of a matrix whose off-diagonal band is controlled by a
// three-index sign pattern
LegOp cg_fund_R(const Session& s);

// permutation u (x) v -> v (x) u on two equal legs
LegOp flip_operator(const RepSpace& v);

// Scalar making (Rc - q s)(Rc + q^-1 s) = 0 for a braided R-matrix Rc on
// fund (x) fund; recovered from the trace assuming the two-eigenvalue
// spectrum, then the relation is verified exactly. Throws HeckeViolation.
Scalar hecke_scalar(const LegOp& rcheck);

// Projector onto the q-analogue of the alternating subspace of fund^p, built
// by the idempotent recursion from the braided R-matrix (normalized so its
// eigenvalues are q and -q^-1). Vanishes for p > dim fund.
LegOp antisymmetrizer(const LegOp& rcheck, int p);

// quantum determinant of a one-leg matrix over fund, taken against the
// twisted braided R-matrix and its top antisymmetrizer
Scalar quantum_determinant(const RootVectors& rv, const LegOp& u);

} // namespace qcg
