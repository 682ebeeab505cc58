#include "qcg/rmatrix.hpp"

#include <map>

namespace qcg {

LegOp cartan_K(const RepSpace& a, const RepSpace& b) {
    return diag_q2(a, b, [&](const Weight& wa, const Weight& wb) {
        Rat acc(0);
        for (int j = 0; j < a.rank(); ++j)
            acc += Rat(wa.h[j]) * wb.zeta[j];
        return acc;
    });
}

LegOp unipotent_R(const RootVectors& rv, const RepSpace& a, const RepSpace& b,
                  FactorOrder order) {
    const Session& s = rv.session();
    Scalar coef = Scalar::qpow(s, Rat(1)) - Scalar::qpow(s, Rat(-1));
    std::vector<PositiveRoot> roots = rv.order();
    if (order == FactorOrder::descending)
        std::reverse(roots.begin(), roots.end());
    LegOp r = LegOp::identity(&s, {a, b});
    for (auto [i, j] : roots) {
        LegOp z = tensor_op(rv.e(a, i, j), rv.f(b, i, j)).scaled(coef);
        r = r * q_exponential(z, -1);
    }
    return r;
}

LegOp standard_R(const RootVectors& rv, const RepSpace& a, const RepSpace& b,
                 FactorOrder order) {
    return cartan_K(a, b) * unipotent_R(rv, a, b, order);
}

Scalar ribbon_scalar(const Session& s, const Weight& w) {
    Rat norm(0);
    for (int j = 0; j < s.rank(); ++j)
        norm += Rat(w.h[j]) * w.zeta[j];
    return Scalar::qpow(s, -(norm + w.two_rho));
}

LegOp ribbon_mu(const RepSpace& a) {
    return diag_q(a, [](const Weight& w) { return Rat(w.two_rho); });
}

namespace {

using Vec = std::vector<Scalar>;

// incremental Gauss basis for independence tests over the exact scalar field
struct GaussBasis {
    std::vector<Vec> rows;
    std::vector<int> pivots;

    // reduces w in place; returns the pivot column if w is independent of the
    // current span, or -1
    int residual_pivot(Vec& w) const {
        for (std::size_t k = 0; k < rows.size(); ++k) {
            const Scalar& lead = w[pivots[k]];
            if (lead.is_zero())
                continue;
            Scalar c = lead;
            for (std::size_t t = 0; t < w.size(); ++t)
                w[t] -= c * rows[k][t];
        }
        for (std::size_t t = 0; t < w.size(); ++t)
            if (!w[t].is_zero())
                return static_cast<int>(t);
        return -1;
    }

    bool insert(Vec w) {
        int p = residual_pivot(w);
        if (p < 0)
            return false;
        Scalar inv = w[p].inverse();
        for (auto& c : w)
            c *= inv;
        rows.push_back(std::move(w));
        pivots.push_back(p);
        return true;
    }
};

Vec apply_op(const LegOp& op, const Vec& v) {
    Vec r(v.size(), Scalar::zero(op.session()));
    for (auto& [rc, val] : op.entries())
        if (!v[rc.second].is_zero())
            r[rc.first] += val * v[rc.second];
    return r;
}

// kernel of all raising generators restricted to one weight block
std::vector<Vec> highest_weight_vectors(const RepSpace& rep, const std::vector<int>& block) {
    const Session& s = rep.session();
    int k = static_cast<int>(block.size());
    // stack the images of the block basis vectors under every e_i and
    // column-reduce: kernel columns are the primitive vectors
    std::vector<Vec> cols(k, Vec(static_cast<std::size_t>(rep.dim()) * s.rank(),
                                 Scalar::zero(s)));
    for (int i = 1; i <= s.rank(); ++i) {
        const LegOp& e = rep.e(i);
        for (int c = 0; c < k; ++c)
            for (int r = 0; r < rep.dim(); ++r) {
                Scalar val = e.at(r, block[c]);
                if (!val.is_zero())
                    cols[c][(i - 1) * rep.dim() + r] = val;
            }
    }
    // column echelon: combine columns to clear pivots, survivors of the
    // identity bookkeeping spanning the kernel
    std::vector<Vec> track(k, Vec(k, Scalar::zero(s)));
    for (int c = 0; c < k; ++c)
        track[c][c] = Scalar::one(s);
    std::vector<int> used_pivot;
    std::vector<int> pivot_col;
    for (int c = 0; c < k; ++c) {
        for (std::size_t t = 0; t < used_pivot.size(); ++t) {
            const Scalar& lead = cols[c][used_pivot[t]];
            if (lead.is_zero())
                continue;
            Scalar f = lead;
            int pc = pivot_col[t];
            for (std::size_t r = 0; r < cols[c].size(); ++r)
                cols[c][r] -= f * cols[pc][r];
            for (int r = 0; r < k; ++r)
                track[c][r] -= f * track[pc][r];
        }
        int p = -1;
        for (std::size_t r = 0; r < cols[c].size(); ++r)
            if (!cols[c][r].is_zero()) {
                p = static_cast<int>(r);
                break;
            }
        if (p >= 0) {
            Scalar inv = cols[c][p].inverse();
            for (auto& x : cols[c])
                x *= inv;
            for (auto& x : track[c])
                x *= inv;
            used_pivot.push_back(p);
            pivot_col.push_back(c);
        }
    }
    std::vector<Vec> result;
    for (int c = 0; c < k; ++c) {
        bool zero = true;
        for (auto& x : cols[c])
            if (!x.is_zero()) {
                zero = false;
                break;
            }
        if (!zero)
            continue;
        Vec full(rep.dim(), Scalar::zero(s));
        for (int r = 0; r < k; ++r)
            full[block[r]] = track[c][r];
        result.push_back(std::move(full));
    }
    return result;
}

} // namespace

LegOp ribbon_v(const RepSpace& a) {
    const Session& s = a.session();
    std::map<std::vector<int>, std::vector<int>> blocks;
    for (int i = 0; i < a.dim(); ++i)
        blocks[a.weight(i).h].push_back(i);

    GaussBasis seen;
    std::vector<Vec> columns;
    std::vector<Scalar> values;
    for (auto& [h, block] : blocks) {
        for (Vec& hw : highest_weight_vectors(a, block)) {
            Scalar val = ribbon_scalar(s, a.weight(block[0]));
            if (!seen.insert(hw))
                continue;
            // close the constituent under the lowering generators
            std::vector<Vec> queue;
            columns.push_back(hw);
            values.push_back(val);
            queue.push_back(std::move(hw));
            while (!queue.empty()) {
                Vec v = std::move(queue.back());
                queue.pop_back();
                for (int i = 1; i <= s.rank(); ++i) {
                    Vec w = apply_op(a.f(i), v);
                    if (seen.insert(w)) {
                        columns.push_back(w);
                        values.push_back(val);
                        queue.push_back(std::move(w));
                    }
                }
            }
        }
    }
    if (static_cast<int>(columns.size()) != a.dim())
        throw NotCompletelyReducible();

    LegOp t(&s, {a});
    for (int c = 0; c < a.dim(); ++c)
        for (int r = 0; r < a.dim(); ++r)
            if (!columns[c][r].is_zero())
                t.set(r, c, columns[c][r]);
    LegOp d(&s, {a});
    for (int c = 0; c < a.dim(); ++c)
        d.set(c, c, values[c]);
    return t * d * t.inverse();
}

} // namespace qcg
