#include "qcg/cgtwist.hpp"

#include "qcg/rmatrix.hpp"

namespace qcg {

int twist_w_exponent(int n, int k, int i, int j) {
    if (k < 1 || k > n - 1 || i < 1 || j < 1 || j > n) return 0;
    if (j == i + k) return 1;
    if (j == i + k + 1) return -1;
    return 0;
}

LegOp twist_s(const RepSpace& a, const RepSpace& b, int k) {
    int n = a.rank();
    return diag_q2(a, b, [n, k](const Weight& wa, const Weight& wb) {
        Rat tot(0);
        for (int i = 1; i + k <= n; ++i) tot += wa.zeta[i - 1] * wb.zeta[i + k - 1];
        return tot;
    });
}

LegOp twist_w(const RepSpace& a, const RepSpace& b, int k) {
    int n = a.rank();
    return diag_q2(a, b, [n, k](const Weight& wa, const Weight& wb) {
        Rat tot(0);
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j)
                if (int c = twist_w_exponent(n, k, i, j))
                    tot += Rat(c) * wa.zeta[i - 1] * wb.zeta[j - 1];
        return tot;
    });
}

LegOp shifted_unipotent_R(const RootVectors& rv, const RepSpace& a, const RepSpace& b,
                          int k, int m) {
    const Session& s = rv.session();
    Scalar coef = Scalar::qpow(s, Rat(1)) - Scalar::qpow(s, Rat(-1));
    LegOp r = LegOp::identity(&s, {a, b});
    for (const PositiveRoot& al : rv.order()) {
        int ei = al.i - (k - m), ej = al.j - (k - m);
        int fi = al.i + m, fj = al.j + m;
        if (ei < 1 || fj > s.rank()) continue;
        LegOp z = tensor_op(rv.e(a, ei, ej), rv.f(b, fi, fj)).scaled(coef);
        r = r * q_exponential(z, -1);
    }
    return r;
}

LegOp shifted_unipotent_R_mid(const RootVectors& rv, const RepSpace& a, const RepSpace& b,
                              const RepSpace& c, int k, int m, int middle_sign) {
    const Session& s = rv.session();
    Scalar coef = Scalar::qpow(s, Rat(1)) - Scalar::qpow(s, Rat(-1));
    LegOp r = LegOp::identity(&s, {a, b, c});
    for (const PositiveRoot& al : rv.order()) {
        int ei = al.i - k, ej = al.j - k;
        int fi = al.i + m, fj = al.j + m;
        if (ei < 1 || fj > s.rank()) continue;
        LegOp mid = diag_q(b, [al, middle_sign](const Weight& w) {
            int tot = 0;
            for (int l = al.i; l <= al.j; ++l) tot += w.h[l - 1];
            return Rat(middle_sign * tot);
        });
        LegOp z = tensor_op(rv.e(a, ei, ej), tensor_op(mid, rv.f(c, fi, fj))).scaled(coef);
        r = r * q_exponential(z, -1);
    }
    return r;
}

LegOp twist_factor(const RootVectors& rv, const RepSpace& a, const RepSpace& b, int k) {
    return twist_w(a, b, k) * shifted_unipotent_R(rv, a, b, k);
}

LegOp cg_twist(const RootVectors& rv, const RepSpace& a, const RepSpace& b) {
    const Session& s = rv.session();
    LegOp j = LegOp::identity(&s, {a, b});
    for (int k = 1; k <= s.rank() - 1; ++k) j = j * twist_factor(rv, a, b, k);
    return j;
}

LegOp cg_R(const RootVectors& rv, const RepSpace& a, const RepSpace& b) {
    LegOp j12 = cg_twist(rv, a, b);
    LegOp j21 = cg_twist(rv, b, a).permute_legs({1, 0});
    return j21.inverse() * standard_R(rv, a, b) * j12;
}

LegOp cg_fund_R(const Session& s) {
    int d = s.rank() + 1;
    RepSpace f = RepSpace::fundamental(s);
    Scalar pref = Scalar::qpow(s, Rat(-1, d));
    Scalar qq = Scalar::qpow(s, Rat(1));
    Scalar coef = qq - Scalar::qpow(s, Rat(-1));

    LegOp rt(&s, {f, f});
    for (int r = 1; r <= d; ++r)
        for (int c = 1; c <= d; ++c) {
            int idx = (r - 1) * d + (c - 1);
            rt.add_to(idx, idx, pref * qq * Scalar::qpow(s, Rat(2 * (r - c), d)));
        }
    for (int i = 1; i <= d; ++i)
        for (int j = 1; j <= d; ++j)
            for (int k = 1; k <= d; ++k) {
                int eta = 0;
                if (i <= k && k < j) eta = 1;
                if (j <= k && k < i) eta = -1;
                if (eta == 0) continue;
                int row = (i - 1) * d + (j - 1);
                int col = (j + i - k - 1) * d + (k - 1);
                Scalar v = pref * coef * Scalar::qpow(s, Rat(2 * (i - k), d));
                rt.add_to(row, col, eta > 0 ? v : -v);
            }

    LegOp dm(&s, {f});
    for (int i = 1; i <= d; ++i)
        dm.set(i - 1, i - 1, Scalar::qpow(s, Rat(i * i - 3 * i, 2 * d)));
    LegOp dd = tensor_op(dm, dm);
    return dd * rt * dd.inverse_diagonal();
}

LegOp flip_operator(const RepSpace& v) {
    const Session& s = v.session();
    LegOp p(&s, {v, v});
    int d = v.dim();
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            p.set(i * d + j, j * d + i, Scalar::one(s));
    return p;
}

Scalar hecke_scalar(const LegOp& rcheck) {
    const Session& s = rcheck.session();
    int d = rcheck.legs()[0].dim();
    Scalar qq = Scalar::qpow(s, Rat(1));
    Scalar qi = Scalar::qpow(s, Rat(-1));
    // trace of a two-eigenvalue matrix: q s on the symmetric part,
    // -q^-1 s on the alternating part
    Scalar denom = qq * Scalar::rational(s, Rat(d * (d + 1) / 2)) -
                   qi * Scalar::rational(s, Rat(d * (d - 1) / 2));
    Scalar sv = rcheck.trace() / denom;
    LegOp one = LegOp::identity(&rcheck.session(), rcheck.legs());
    if (!((rcheck - one.scaled(qq * sv)) * (rcheck + one.scaled(qi * sv))).is_zero())
        throw HeckeViolation();
    return sv;
}

LegOp antisymmetrizer(const LegOp& rcheck, int p) {
    const Session& s = rcheck.session();
    Scalar sv = hecke_scalar(rcheck);
    LegOp rn = rcheck.scaled(Scalar::one(s) / sv);
    std::vector<RepSpace> legs(p, rcheck.legs()[0]);
    LegOp a = LegOp::identity(&s, legs);
    for (int m = 2; m <= p; ++m) {
        LegOp step = LegOp::identity(&s, legs).scaled(Scalar::qpow(s, Rat(m - 1))) -
                     embed(rn, {m - 1, m}, legs).scaled(q_bracket(s, m - 1));
        a = (a * step * a).scaled(Scalar::one(s) / q_bracket(s, m));
    }
    return a;
}

Scalar quantum_determinant(const RootVectors& rv, const LegOp& u) {
    const Session& s = rv.session();
    int n = s.rank();
    RepSpace f = RepSpace::fundamental(s);
    LegOp rj = cg_R(rv, f, f) * flip_operator(f);
    std::vector<RepSpace> legs(n + 1, f);
    LegOp m = embed(u, {1}, legs);
    for (int i = 1; i <= n; ++i) m = m * embed(rj, {i, i + 1}, legs);
    LegOp pw = LegOp::identity(&s, legs);
    for (int i = 0; i <= n; ++i) pw = pw * m;
    return (antisymmetrizer(rj, n + 1) * pw).trace();
}

} // namespace qcg
