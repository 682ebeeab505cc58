#pragma once

#include <stdexcept>
#include <vector>

#include "qcg/legop.hpp"
#include "qcg/repspace.hpp"

namespace qcg {

struct OracleMismatch : std::runtime_error {
    explicit OracleMismatch(const std::string& what) : std::runtime_error(what) {}
};

// positive root alpha_i + ... + alpha_j, 1 <= i <= j <= n
struct PositiveRoot {
    int i = 0;
    int j = 0;
    friend bool operator==(const PositiveRoot& a, const PositiveRoot& b) {
        return a.i == b.i && a.j == b.j;
    }
};

// ordering of the positive roots compatible with the chosen longest-word
// expression: for each j the block (1,j), (2,j), ..., (j,j)
std::vector<PositiveRoot> normal_order(int n);

// which operand of the q-commutator multiplies first in the inductive
// definition of composite root generators
enum class BracketConvention { lower_then_simple, simple_then_lower };

// Composite root generators built inductively from the simple ones inside a
// chosen module. Construction validates the convention against the matrix
// units of the fundamental module and refuses to proceed on mismatch.
class RootVectors {
public:
    explicit RootVectors(const Session& s,
                         BracketConvention c = BracketConvention::lower_then_simple);

    const Session& session() const { return *s_; }
    const std::vector<PositiveRoot>& order() const { return order_; }

    // raising generator for alpha_i + ... + alpha_j acting on v
    LegOp e(const RepSpace& v, int i, int j) const;
    // lowering partner
    LegOp f(const RepSpace& v, int i, int j) const;

private:
    const Session* s_;
    BracketConvention c_;
    std::vector<PositiveRoot> order_;
};

// reduced word for the longest Weyl group element: 1, 21, 321, ...
std::vector<int> longest_word(int n);
// reduced word for the Coxeter element: 1, 2, ..., n
std::vector<int> coxeter_word(int n);

// quantum Weyl group generator for the i-th simple reflection, evaluated in v
LegOp weyl_hat(const RepSpace& v, int i);
// product of generators along a reduced word
LegOp weyl_hat(const RepSpace& v, const std::vector<int>& word);
LegOp weyl_hat_longest(const RepSpace& v);

} // namespace qcg
