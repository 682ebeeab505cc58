#pragma once

#include <functional>
#include <memory>
#include <vector>

#include "qcg/scalar.hpp"

namespace qcg {

class LegOp;
struct RepSpaceData;

// Weight of one basis vector: integer values of h_{(1)}..h_{(n)}, rational
// values of zeta^{(1)}..zeta^{(n)}, and the integer eigenvalue of 2t_rho
// (so q^{2t_rho} acts by q^{two_rho}).
struct Weight {
    std::vector<int> h;
    std::vector<Rat> zeta;
    int two_rho = 0;

    friend Weight operator+(const Weight& a, const Weight& b) {
        Weight r = a;
        for (std::size_t i = 0; i < r.h.size(); ++i) {
            r.h[i] += b.h[i];
            r.zeta[i] += b.zeta[i];
        }
        r.two_rho += b.two_rho;
        return r;
    }
    friend bool operator==(const Weight& a, const Weight& b) { return a.h == b.h; }
};

// Finite-dimensional module over the quantized enveloping algebra, built
// from the fundamental representation and tensor products along the
// coproduct. Basis order of a tensor product is row-major in factor order.
// Cheap shared handle; the underlying data is immutable.
class RepSpace {
public:
    RepSpace() = default;

    static RepSpace fundamental(const Session& s);
    static RepSpace trivial(const Session& s);
    static RepSpace tensor(const RepSpace& a, const RepSpace& b);
    static RepSpace tensor_power(const RepSpace& a, int k);

    const Session& session() const;
    int rank() const;
    int dim() const;
    const Weight& weight(int idx) const;
    const std::vector<Weight>& weights() const;

    // simple-root generator actions, i in 1..n, as single-leg operators
    const LegOp& e(int i) const;
    const LegOp& f(int i) const;

    // number of fundamental factors (0 for the trivial module)
    int fund_factors() const;

    bool same_as(const RepSpace& o) const { return d_ == o.d_; }
    explicit operator bool() const { return static_cast<bool>(d_); }

private:
    explicit RepSpace(std::shared_ptr<const RepSpaceData> d) : d_(std::move(d)) {}

    std::shared_ptr<const RepSpaceData> d_;
};

// diagonal operator q^{g(weight)} on one leg
LegOp diag_q(const RepSpace& rep, const std::function<Rat(const Weight&)>& exponent);
// diagonal operator q^{g(weight_1, weight_2)} on two legs
LegOp diag_q2(const RepSpace& a, const RepSpace& b,
              const std::function<Rat(const Weight&, const Weight&)>& exponent);

// every nonzero entry connects equal weights on each leg
bool is_zero_weight(const LegOp& op);

// difference of two weights written in the simple-root basis; integer
// coordinates for weights of the same tensor power
std::vector<Rat> root_coords(const Session& s, const Weight& hi, const Weight& lo);

// sum of root coordinates of (row weight - column weight) over all legs;
// positive means the entry raises
Rat height_change(const LegOp& op, int row, int col);

// off-diagonal entries all strictly raise / strictly lower the weight
bool is_strictly_upper(const LegOp& op);
bool is_strictly_lower(const LegOp& op);

} // namespace qcg
