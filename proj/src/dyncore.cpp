#include "qcg/dyncore.hpp"

#include <algorithm>
#include <utility>

#include "qcg/rmatrix.hpp"

namespace qcg {

namespace {

// the diagonal entry of the dynamical Cartan element on one weight
Scalar cartan_entry(const Session& s, const Weight& w, const Rat& power) {
    int n = s.rank();
    Rat qe(0);
    for (int j = 1; j <= n; ++j) qe += Rat(w.h[j - 1]) * w.zeta[j - 1];
    Scalar r = Scalar::qpow(s, qe * power);
    for (int k = 1; k <= n + 1; ++k) {
        Rat zk = k <= n ? w.zeta[k - 1] : Rat(0);
        Rat zk1 = k >= 2 ? w.zeta[k - 2] : Rat(0);
        Rat e = (zk - zk1) * power;
        if (e != 0) r *= Scalar::nu_pow(s, k, e);
    }
    return r;
}

// apply nu~_v -> nu~_v q^(qsteps[v]) monomialwise
Poly shift_poly(const Poly& p, const std::vector<Rat>& qsteps, int qvar) {
    std::vector<Term> raw(p.terms().begin(), p.terms().end());
    for (Term& t : raw) {
        Rat add(0);
        for (std::size_t v = 0; v < t.m.e.size(); ++v)
            if (static_cast<int>(v) != qvar && !qsteps[v].is_zero())
                add += qsteps[v] * t.m.e[v];
        if (denominator(add) != 1)
            throw std::logic_error("dynamical shift leaves the exponent grid");
        t.m.e[qvar] += add.convert_to<std::int64_t>();
    }
    return Poly::collect(p.nvars(), std::move(raw));
}

Scalar shift_scalar(const Scalar& v, const std::vector<Rat>& qsteps, int qvar) {
    Scalar r = Scalar::from_poly(shift_poly(v.numerator(), qsteps, qvar), v.unit());
    for (const auto& [f, k] : v.denominator())
        r = r / Scalar::from_poly(shift_poly(f, qsteps, qvar), v.unit()).pow(k);
    return r;
}

// height of a weight above a fixed reference, in simple-root steps
std::vector<long> leg_heights(const RepSpace& v) {
    const Session& s = v.session();
    std::vector<long> h(v.dim(), 0);
    for (int i = 0; i < v.dim(); ++i) {
        Rat tot(0);
        for (const Rat& c : root_coords(s, v.weight(i), v.weight(0))) tot += c;
        h[i] = tot.convert_to<long>();
    }
    return h;
}

} // namespace

LegOp dyn_cartan(const RepSpace& v, const Rat& power) {
    const Session& s = v.session();
    LegOp out(&s, {v});
    for (int i = 0; i < v.dim(); ++i) out.set(i, i, cartan_entry(s, v.weight(i), power));
    return out;
}

LegOp dyn_shift(const LegOp& op, int leg) {
    const Session& s = op.session();
    int n = s.rank();
    const RepSpace& v = op.legs().at(leg - 1);
    LegOp out(&s, op.legs());
    for (const auto& [rc, val] : op.entries()) {
        int r2 = op.unflatten(rc.first)[leg - 1];
        int c2 = op.unflatten(rc.second)[leg - 1];
        if (!(v.weight(r2) == v.weight(c2)))
            throw std::logic_error("dynamical shift along a leg the operator moves");
        const Weight& w = v.weight(c2);
        std::vector<Rat> qsteps(s.nvars(), Rat(0));
        for (int k = 1; k <= n; ++k) {
            Rat zk1 = k >= 2 ? w.zeta[k - 2] : Rat(0);
            qsteps[s.nu_tilde_var(k)] = (w.zeta[k - 1] - zk1) / (n + 1);
        }
        out.set(rc.first, rc.second, shift_scalar(val, qsteps, s.q_var()));
    }
    return out;
}

LegOp solve_abrr(const RootVectors& rv, const RepSpace& a, const RepSpace& b) {
    const Session& s = rv.session();
    LegOp lower = unipotent_R(rv, a, b).inverse_unipotent() - LegOp::identity(&s, {a, b});
    std::vector<Scalar> bd;
    bd.reserve(b.dim());
    for (int i = 0; i < b.dim(); ++i) bd.push_back(cartan_entry(s, b.weight(i), Rat(1)));
    std::vector<long> ht = leg_heights(b);
    long hmax = *std::max_element(ht.begin(), ht.end()) -
                *std::min_element(ht.begin(), ht.end());

    Scalar one = Scalar::one(s);
    LegOp f = LegOp::identity(&s, {a, b});
    auto conj = [&](const LegOp& x) {
        LegOp y(&s, x.legs());
        for (const auto& [rc, val] : x.entries()) {
            int r2 = x.unflatten(rc.first)[1];
            int c2 = x.unflatten(rc.second)[1];
            y.set(rc.first, rc.second, val * bd[r2] / bd[c2]);
        }
        return y;
    };
    for (long l = 1; l <= hmax; ++l) {
        LegOp g = lower * conj(f);
        for (const auto& [rc, val] : g.entries()) {
            int r2 = g.unflatten(rc.first)[1];
            int c2 = g.unflatten(rc.second)[1];
            if (ht[c2] - ht[r2] != l) continue;
            Scalar denom = one - bd[r2] / bd[c2];
            if (denom.is_zero()) throw DegenerateBlock();
            f.add_to(rc.first, rc.second, val / denom);
        }
    }
    return f;
}

LegOp dyn_R(const RootVectors& rv, const RepSpace& a, const RepSpace& b) {
    LegOp f21 = solve_abrr(rv, b, a).permute_legs({1, 0});
    return f21.inverse_unipotent() * standard_R(rv, a, b) * solve_abrr(rv, a, b);
}

LegOp fund_dyn_F(const Session& s) {
    RepSpace f = RepSpace::fundamental(s);
    int d = f.dim();
    LegOp out = LegOp::identity(&s, {f, f});
    Scalar one = Scalar::one(s);
    Scalar dq = Scalar::qpow(s, Rat(1)) - Scalar::qpow(s, Rat(-1));
    for (int i = 1; i <= d; ++i)
        for (int j = i + 1; j <= d; ++j) {
            Scalar ratio = Scalar::nu_pow(s, j, Rat(1)) * Scalar::nu_pow(s, i, Rat(-1));
            out.add_to((i - 1) * d + (j - 1), (j - 1) * d + (i - 1),
                       -dq / (one - ratio));
        }
    return out;
}

LegOp fund_dyn_R(const Session& s) {
    RepSpace f = RepSpace::fundamental(s);
    int d = f.dim();
    Scalar pref = Scalar::qpow(s, Rat(-1, d));
    Scalar one = Scalar::one(s);
    Scalar dq = Scalar::qpow(s, Rat(1)) - Scalar::qpow(s, Rat(-1));
    LegOp out(&s, {f, f});
    for (int i = 1; i <= d; ++i) out.set((i - 1) * d + (i - 1), (i - 1) * d + (i - 1),
                                         pref * Scalar::qpow(s, Rat(1)));
    for (int i = 1; i <= d; ++i)
        for (int j = 1; j <= d; ++j) {
            if (i == j) continue;
            Scalar ratio = Scalar::nu_pow(s, i, Rat(1)) * Scalar::nu_pow(s, j, Rat(-1));
            Scalar diag = one;
            if (i > j) diag -= dq * dq * ratio / ((one - ratio) * (one - ratio));
            out.set((i - 1) * d + (j - 1), (i - 1) * d + (j - 1), pref * diag);
            out.add_to((i - 1) * d + (j - 1), (j - 1) * d + (i - 1),
                       pref * dq / (one - ratio));
        }
    return out;
}

std::vector<std::vector<std::complex<double>>>
truncated_dyn_F(const RootVectors& rv, const RepSpace& a, const RepSpace& b,
                int depth, const std::vector<std::complex<double>>& point) {
    using C = std::complex<double>;
    const Session& s = rv.session();
    auto rhat = unipotent_R(rv, a, b).eval_at(point);
    std::vector<C> bdiag;
    bdiag.reserve(b.dim());
    for (int i = 0; i < b.dim(); ++i)
        bdiag.push_back(cartan_entry(s, b.weight(i), Rat(1)).eval_at(point));
    int da = a.dim(), db = b.dim(), d = da * db;
    std::vector<std::vector<C>> prod(d, std::vector<C>(d, 0.0));
    for (int i = 0; i < d; ++i) prod[i][i] = 1.0;
    for (int k = 0; k <= depth; ++k) {
        // rightmost new factor: B_2^-(k+1) Rhat B_2^(k+1), the conjugation
        // scales each entry by a ratio of diagonal values
        std::vector<std::vector<C>> next(d, std::vector<C>(d, 0.0));
        for (int c = 0; c < d; ++c)
            for (int t = 0; t < d; ++t) {
                if (rhat[c][t] == C(0.0)) continue;
                C fac = rhat[c][t] * std::pow(bdiag[t % db] / bdiag[c % db], k + 1);
                for (int r = 0; r < d; ++r)
                    if (prod[r][c] != C(0.0)) next[r][t] += prod[r][c] * fac;
            }
        prod = std::move(next);
    }
    return prod;
}

} // namespace qcg
