#pragma once

#include "qcg/rootvec.hpp"

namespace qcg {

struct NotCompletelyReducible : std::runtime_error {
    NotCompletelyReducible()
        : std::runtime_error("module did not split into highest-weight constituents") {}
};

// order in which the per-root factors are multiplied, following the root
// ordering of normal_order or its reverse
enum class FactorOrder { ascending, descending };

// diagonal Cartan half: entry q^{sum_j h_j(first) zeta_j(second)}
LegOp cartan_K(const RepSpace& a, const RepSpace& b);

// ordered product over positive roots of the q-exponential factors
// built on (q - q^-1) e_root (x) f_root
LegOp unipotent_R(const RootVectors& rv, const RepSpace& a, const RepSpace& b,
                  FactorOrder order = FactorOrder::ascending);

LegOp standard_R(const RootVectors& rv, const RepSpace& a, const RepSpace& b,
                 FactorOrder order = FactorOrder::ascending);

// central ribbon operator: q^{-(lambda, lambda + 2 rho)} on the constituent
// generated by each highest-weight vector
LegOp ribbon_v(const RepSpace& a);

// group-like balancing operator q^{2 t_rho}
LegOp ribbon_mu(const RepSpace& a);

// value of the ribbon scalar on a highest-weight constituent of weight w
Scalar ribbon_scalar(const Session& s, const Weight& w);

} // namespace qcg
