#pragma once

#include <functional>
#include <map>
#include <utility>
#include <vector>

#include "qcg/repspace.hpp"
#include "qcg/scalar.hpp"

namespace qcg {

struct ArityMismatch : std::runtime_error {
    explicit ArityMismatch(const std::string& what) : std::runtime_error(what) {}
};

struct NotNilpotent : std::runtime_error {
    NotNilpotent() : std::runtime_error("operator is not nilpotent in this representation") {}
};

struct SingularOperator : std::runtime_error {
    SingularOperator() : std::runtime_error("operator is not invertible") {}
};

// Linear operator on a tensor product of representation spaces. Entries are
// exact scalars stored sparsely under a flattened row-major multi-index;
// legs remember which space each tensor slot carries.
class LegOp {
public:
    LegOp() = default;
    LegOp(const Session* s, std::vector<RepSpace> legs);

    static LegOp identity(const Session* s, std::vector<RepSpace> legs);

    const Session& session() const { return *s_; }
    const std::vector<RepSpace>& legs() const { return legs_; }
    const std::vector<int>& dims() const { return dims_; }
    int total_dim() const { return total_; }
    int arity() const { return static_cast<int>(legs_.size()); }

    bool is_zero() const { return a_.empty(); }
    bool is_identity() const;
    std::size_t nnz() const { return a_.size(); }

    const std::map<std::pair<int, int>, Scalar>& entries() const { return a_; }
    // zero scalar if absent
    Scalar at(int row, int col) const;
    void set(int row, int col, Scalar v);
    void add_to(int row, int col, const Scalar& v);

    // multi-index helpers for the row-major flattening
    std::vector<int> unflatten(int idx) const;
    int flatten(const std::vector<int>& multi) const;

    LegOp operator-() const;
    LegOp scaled(const Scalar& c) const;
    friend LegOp operator+(const LegOp& x, const LegOp& y);
    friend LegOp operator-(const LegOp& x, const LegOp& y);
    friend LegOp operator*(const LegOp& x, const LegOp& y);
    friend bool operator==(const LegOp& x, const LegOp& y) { return (x - y).is_zero(); }

    // tensor product: legs of x followed by legs of y
    friend LegOp tensor_op(const LegOp& x, const LegOp& y);

    // result leg p carries old leg perm[p]; entries are re-indexed so that
    // the operator is conjugated by the corresponding permutation of factors
    LegOp permute_legs(const std::vector<int>& perm) const;

    // reinterpret the same matrix over different legs (total dimension and
    // row-major flattening must agree, e.g. fund x fund viewed as one leg)
    LegOp reshape(std::vector<RepSpace> legs) const;

    Scalar trace() const;

    // inverse of 1 + nilpotent via the terminating Neumann series
    LegOp inverse_unipotent() const;
    LegOp inverse_diagonal() const;
    // exact Gauss-Jordan elimination
    LegOp inverse() const;

    bool is_diagonal() const;

    std::vector<std::vector<std::complex<double>>>
    eval_at(const std::vector<std::complex<double>>& point) const;

private:
    const Session* s_ = nullptr;
    std::vector<RepSpace> legs_;
    std::vector<int> dims_;
    int total_ = 1;
    std::map<std::pair<int, int>, Scalar> a_;
};

// identities placed on the stated positions (1-based) of the ambient legs
LegOp embed(const LegOp& op, const std::vector<int>& positions,
            const std::vector<RepSpace>& ambient);

// q-exponential sum_m z^m/(m)_base! for nilpotent z; base_sign -1 selects
// the base q^-1
LegOp q_exponential(const LegOp& z, int base_sign);

double max_abs(const std::vector<std::vector<std::complex<double>>>& m);

} // namespace qcg
