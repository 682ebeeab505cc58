#include "qcg/legop.hpp"

#include <algorithm>

namespace qcg {

LegOp::LegOp(const Session* s, std::vector<RepSpace> legs)
    : s_(s), legs_(std::move(legs)) {
    dims_.reserve(legs_.size());
    total_ = 1;
    for (auto& r : legs_) {
        dims_.push_back(r.dim());
        total_ *= r.dim();
    }
}

LegOp LegOp::identity(const Session* s, std::vector<RepSpace> legs) {
    LegOp r(s, std::move(legs));
    Scalar one = Scalar::one(*s);
    for (int i = 0; i < r.total_; ++i)
        r.a_.emplace(std::make_pair(i, i), one);
    return r;
}

bool LegOp::is_identity() const {
    if (static_cast<int>(a_.size()) != total_)
        return false;
    for (auto& [rc, v] : a_)
        if (rc.first != rc.second || !v.is_one())
            return false;
    return true;
}

Scalar LegOp::at(int row, int col) const {
    auto it = a_.find({row, col});
    return it == a_.end() ? Scalar::zero(*s_) : it->second;
}

void LegOp::set(int row, int col, Scalar v) {
    if (v.is_zero())
        a_.erase({row, col});
    else
        a_.insert_or_assign({row, col}, std::move(v));
}

void LegOp::add_to(int row, int col, const Scalar& v) {
    if (v.is_zero())
        return;
    auto [it, fresh] = a_.try_emplace({row, col}, v);
    if (!fresh) {
        it->second += v;
        if (it->second.is_zero())
            a_.erase(it);
    }
}

std::vector<int> LegOp::unflatten(int idx) const {
    std::vector<int> multi(dims_.size());
    for (std::size_t p = dims_.size(); p-- > 0;) {
        multi[p] = idx % dims_[p];
        idx /= dims_[p];
    }
    return multi;
}

int LegOp::flatten(const std::vector<int>& multi) const {
    int idx = 0;
    for (std::size_t p = 0; p < dims_.size(); ++p)
        idx = idx * dims_[p] + multi[p];
    return idx;
}

LegOp LegOp::operator-() const {
    LegOp r(s_, legs_);
    for (auto& [rc, v] : a_)
        r.a_.emplace(rc, -v);
    return r;
}

LegOp LegOp::scaled(const Scalar& c) const {
    LegOp r(s_, legs_);
    if (c.is_zero())
        return r;
    for (auto& [rc, v] : a_) {
        Scalar w = v * c;
        if (!w.is_zero())
            r.a_.emplace(rc, std::move(w));
    }
    return r;
}

LegOp operator+(const LegOp& x, const LegOp& y) {
    if (x.dims_ != y.dims_)
        throw ArityMismatch("operator shape mismatch in addition");
    LegOp r = x;
    for (auto& [rc, v] : y.a_)
        r.add_to(rc.first, rc.second, v);
    return r;
}

LegOp operator-(const LegOp& x, const LegOp& y) {
    return x + (-y);
}

LegOp operator*(const LegOp& x, const LegOp& y) {
    if (x.dims_ != y.dims_)
        throw ArityMismatch("operator shape mismatch in product");
    LegOp r(x.s_, x.legs_);
    for (auto& [rc, v] : x.a_) {
        auto lo = y.a_.lower_bound({rc.second, 0});
        auto hi = y.a_.lower_bound({rc.second + 1, 0});
        for (auto it = lo; it != hi; ++it)
            r.add_to(rc.first, it->first.second, v * it->second);
    }
    return r;
}

LegOp tensor_op(const LegOp& x, const LegOp& y) {
    std::vector<RepSpace> legs = x.legs_;
    legs.insert(legs.end(), y.legs_.begin(), y.legs_.end());
    LegOp r(x.s_, std::move(legs));
    for (auto& [rcx, vx] : x.a_)
        for (auto& [rcy, vy] : y.a_) {
            int row = rcx.first * y.total_ + rcy.first;
            int col = rcx.second * y.total_ + rcy.second;
            Scalar v = vx * vy;
            if (!v.is_zero())
                r.a_.emplace(std::make_pair(row, col), std::move(v));
        }
    return r;
}

LegOp LegOp::permute_legs(const std::vector<int>& perm) const {
    if (perm.size() != legs_.size())
        throw ArityMismatch("permutation arity mismatch");
    std::vector<RepSpace> legs(perm.size());
    for (std::size_t p = 0; p < perm.size(); ++p)
        legs[p] = legs_[perm[p]];
    LegOp r(s_, std::move(legs));
    for (auto& [rc, v] : a_) {
        std::vector<int> rm = unflatten(rc.first);
        std::vector<int> cm = unflatten(rc.second);
        std::vector<int> rp(perm.size()), cp(perm.size());
        for (std::size_t p = 0; p < perm.size(); ++p) {
            rp[p] = rm[perm[p]];
            cp[p] = cm[perm[p]];
        }
        r.a_.emplace(std::make_pair(r.flatten(rp), r.flatten(cp)), v);
    }
    return r;
}

LegOp LegOp::reshape(std::vector<RepSpace> legs) const {
    LegOp r(s_, std::move(legs));
    if (r.total_ != total_)
        throw ArityMismatch("reshape changes total dimension");
    r.a_ = a_;
    return r;
}

Scalar LegOp::trace() const {
    Scalar acc = Scalar::zero(*s_);
    for (auto& [rc, v] : a_)
        if (rc.first == rc.second)
            acc += v;
    return acc;
}

LegOp LegOp::inverse_unipotent() const {
    LegOp one = identity(s_, legs_);
    LegOp nil = *this - one;
    LegOp acc = one;
    LegOp p = one;
    for (int k = 1; !nil.is_zero(); ++k) {
        if (k > total_)
            throw NotNilpotent();
        p = p * nil;
        if (p.is_zero())
            break;
        acc = (k % 2 == 1) ? acc - p : acc + p;
    }
    return acc;
}

bool LegOp::is_diagonal() const {
    for (auto& [rc, v] : a_)
        if (rc.first != rc.second)
            return false;
    return true;
}

LegOp LegOp::inverse_diagonal() const {
    if (!is_diagonal() || static_cast<int>(a_.size()) != total_)
        throw SingularOperator();
    LegOp r(s_, legs_);
    for (auto& [rc, v] : a_)
        r.a_.emplace(rc, v.inverse());
    return r;
}

LegOp LegOp::inverse() const {
    if (is_diagonal())
        return inverse_diagonal();

    // dense exact Gauss-Jordan on [A | I]
    int d = total_;
    std::vector<std::vector<Scalar>> m(d, std::vector<Scalar>(2 * d, Scalar::zero(*s_)));
    for (auto& [rc, v] : a_)
        m[rc.first][rc.second] = v;
    for (int i = 0; i < d; ++i)
        m[i][d + i] = Scalar::one(*s_);

    for (int col = 0; col < d; ++col) {
        // pick the structurally cheapest pivot to limit expression growth
        int pivot = -1;
        std::size_t best = 0;
        for (int r = col; r < d; ++r) {
            if (m[r][col].is_zero())
                continue;
            std::size_t w = m[r][col].numerator().size() + m[r][col].denominator().size();
            if (pivot < 0 || w < best) {
                pivot = r;
                best = w;
            }
        }
        if (pivot < 0)
            throw SingularOperator();
        std::swap(m[col], m[pivot]);
        Scalar inv = m[col][col].inverse();
        for (int c = col; c < 2 * d; ++c)
            if (!m[col][c].is_zero())
                m[col][c] *= inv;
        for (int r = 0; r < d; ++r) {
            if (r == col || m[r][col].is_zero())
                continue;
            Scalar factor = m[r][col];
            for (int c = col; c < 2 * d; ++c)
                if (!m[col][c].is_zero())
                    m[r][c] -= factor * m[col][c];
        }
    }

    LegOp r(s_, legs_);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            if (!m[i][d + j].is_zero())
                r.a_.emplace(std::make_pair(i, j), m[i][d + j]);
    return r;
}

std::vector<std::vector<std::complex<double>>>
LegOp::eval_at(const std::vector<std::complex<double>>& point) const {
    std::vector<std::vector<std::complex<double>>> m(
        total_, std::vector<std::complex<double>>(total_, 0.0));
    for (auto& [rc, v] : a_)
        m[rc.first][rc.second] = v.eval_at(point);
    return m;
}

LegOp embed(const LegOp& op, const std::vector<int>& positions,
            const std::vector<RepSpace>& ambient) {
    if (positions.size() != op.legs().size())
        throw ArityMismatch("one position per operator leg required");
    LegOp r(&op.session(), ambient);
    std::vector<int> where(positions.size());
    std::vector<bool> taken(ambient.size(), false);
    for (std::size_t t = 0; t < positions.size(); ++t) {
        int p = positions[t] - 1;
        if (p < 0 || p >= static_cast<int>(ambient.size()) || taken[p])
            throw ArityMismatch("positions must be distinct and within the ambient arity");
        if (ambient[p].dim() != op.dims()[t])
            throw ArityMismatch("leg dimension mismatch at embedding position");
        taken[p] = true;
        where[t] = p;
    }
    std::vector<int> free;
    for (std::size_t p = 0; p < ambient.size(); ++p)
        if (!taken[p])
            free.push_back(static_cast<int>(p));

    int free_total = 1;
    for (int p : free)
        free_total *= ambient[p].dim();

    std::vector<int> rm(ambient.size()), cm(ambient.size());
    for (auto& [rc, v] : op.entries()) {
        std::vector<int> orow = op.unflatten(rc.first);
        std::vector<int> ocol = op.unflatten(rc.second);
        for (int fi = 0; fi < free_total; ++fi) {
            int rest = fi;
            for (std::size_t k = free.size(); k-- > 0;) {
                rm[free[k]] = cm[free[k]] = rest % ambient[free[k]].dim();
                rest /= ambient[free[k]].dim();
            }
            for (std::size_t t = 0; t < where.size(); ++t) {
                rm[where[t]] = orow[t];
                cm[where[t]] = ocol[t];
            }
            r.set(r.flatten(rm), r.flatten(cm), v);
        }
    }
    return r;
}

LegOp q_exponential(const LegOp& z, int base_sign) {
    const Session& s = z.session();
    LegOp acc = LegOp::identity(&s, z.legs());
    LegOp p = acc;
    for (int m = 1;; ++m) {
        p = p * z;
        if (p.is_zero())
            break;
        if (m > z.total_dim())
            throw NotNilpotent();
        acc = acc + p.scaled(q_paren_factorial(s, m, base_sign).inverse());
    }
    return acc;
}

double max_abs(const std::vector<std::vector<std::complex<double>>>& m) {
    double r = 0;
    for (auto& row : m)
        for (auto& v : row)
            r = std::max(r, std::abs(v));
    return r;
}

} // namespace qcg
