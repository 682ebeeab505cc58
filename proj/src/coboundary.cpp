#include "qcg/coboundary.hpp"

#include <map>
#include <stdexcept>
#include <utility>

#include "qcg/dyncore.hpp"

namespace qcg {

namespace {

// q^(zeta^(t)) as a diagonal operator; t = 0 gives the identity
LegOp zeta_diag(const RepSpace& v, int t) {
    return diag_q(v, [t](const Weight& w) { return t >= 1 ? w.zeta[t - 1] : Rat(0); });
}

} // namespace

LegOp gauge_m0(const RepSpace& v, DiagonalChoice choice) {
    const Session& s = v.session();
    if (choice == DiagonalChoice::trivial) {
        if (s.rank() >= 2)
            throw std::invalid_argument(
                "the identity normalization is only consistent in rank one");
        return LegOp::identity(&s, {v});
    }
    LegOp r(&s, {v});
    for (int i = 0; i < v.dim(); ++i) {
        const Weight& w = v.weight(i);
        Scalar c = Scalar::one(s);
        for (int k = 1; k <= s.rank(); ++k) {
            Rat z = w.zeta[k - 1];
            c *= Scalar::nu_pow(s, k + 1, z / 2) * Scalar::qpow(s, -(z * z) / 2);
        }
        r.set(i, i, std::move(c));
    }
    return r;
}

LegOp gauge_m0_inverse(const RepSpace& v, DiagonalChoice choice) {
    return gauge_m0(v, choice).inverse_diagonal();
}

LegOp gauge_c_plus(const RepSpace& v, int m) {
    const Session& s = v.session();
    if (m < 1)
        throw std::invalid_argument("shift index must be >= 1");
    LegOp r = LegOp::identity(&s, {v});
    for (int j = 1; j <= s.rank() - m + 1; ++j) {
        LegOp arg = (zeta_diag(v, j - 1) * v.e(j)).scaled(-Scalar::nu_pow(s, j + m, -1));
        r = r * q_exponential(arg, -1);
    }
    return r;
}

LegOp gauge_c_minus_inverse(const RepSpace& v) {
    const Session& s = v.session();
    LegOp r = LegOp::identity(&s, {v});
    for (int k = 1; k <= s.rank(); ++k) {
        LegOp d = diag_q(v, [k](const Weight& w) {
            Rat z = k >= 2 ? w.zeta[k - 2] : Rat(0);
            return -z - w.h[k - 1] - 1;
        });
        LegOp arg = (d * v.f(k)).scaled(Scalar::nu_pow(s, k + 1, 1));
        r = r * q_exponential(arg, -1);
    }
    return r;
}

LegOp gauge_c_minus(const RepSpace& v) {
    return gauge_c_minus_inverse(v).inverse_unipotent();
}

LegOp gauge_m_plus(const RepSpace& v) {
    const Session& s = v.session();
    LegOp r = LegOp::identity(&s, {v});
    for (int m = 1; m <= s.rank(); ++m) r = r * gauge_c_plus(v, m);
    return r;
}

LegOp solve_m_minus(const RepSpace& v) {
    const Session& s = v.session();
    LegOp b = dyn_cartan(v, Rat(1));
    LegOp low = gauge_c_minus(v) - LegOp::identity(&s, {v});

    std::vector<Rat> ht(v.dim(), Rat(0));
    for (int i = 0; i < v.dim(); ++i)
        for (const Rat& c : root_coords(s, v.weight(i), v.weight(0))) ht[i] += c;

    // row indices grouped by how far the row sits below the column
    std::map<Rat, std::vector<std::pair<int, int>>> levels;
    for (int r = 0; r < v.dim(); ++r)
        for (int c = 0; c < v.dim(); ++c)
            if (ht[c] - ht[r] >= 1) levels[ht[c] - ht[r]].push_back({r, c});

    LegOp m = LegOp::identity(&s, {v});
    Scalar one = Scalar::one(s);
    for (const auto& lv : levels) {
        const std::vector<std::pair<int, int>>& cells = lv.second;
        // conjugate the part solved so far by the dynamical diagonal
        LegOp conj(&s, {v});
        for (const auto& [rc, val] : m.entries())
            conj.set(rc.first, rc.second,
                     val * b.at(rc.first, rc.first) / b.at(rc.second, rc.second));
        LegOp t = low * conj;
        for (const auto& [r, c] : cells) {
            Scalar rhs = t.at(r, c);
            if (rhs.is_zero())
                continue;
            Scalar den = one - b.at(r, r) / b.at(c, c);
            if (den.is_zero())
                throw DegenerateBlock();
            m.add_to(r, c, rhs / den);
        }
    }
    return m;
}

std::vector<std::vector<std::complex<double>>>
truncated_m_minus(const RepSpace& v, int depth,
                  const std::vector<std::complex<double>>& point, bool reversed) {
    const int d = v.dim();
    auto cminv = gauge_c_minus_inverse(v).eval_at(point);
    LegOp bop = dyn_cartan(v, Rat(1));
    std::vector<std::complex<double>> b(d);
    for (int i = 0; i < d; ++i) b[i] = bop.at(i, i).eval_at(point);

    std::vector prod(d, std::vector<std::complex<double>>(d));
    for (int i = 0; i < d; ++i) prod[i][i] = 1.0;
    auto mul = [d](const auto& x, const auto& y) {
        std::vector out(d, std::vector<std::complex<double>>(d));
        for (int r = 0; r < d; ++r)
            for (int k = 0; k < d; ++k) {
                if (x[r][k] == 0.0)
                    continue;
                for (int c = 0; c < d; ++c) out[r][c] += x[r][k] * y[k][c];
            }
        return out;
    };

    for (int k = 1; k <= depth; ++k) {
        std::vector factor(d, std::vector<std::complex<double>>(d));
        for (int r = 0; r < d; ++r)
            for (int c = 0; c < d; ++c)
                factor[r][c] = cminv[r][c] * std::pow(b[c] / b[r], k);
        prod = reversed ? mul(factor, prod) : mul(prod, factor);
    }
    return prod;
}

LegOp gauge_m(const RepSpace& v, DiagonalChoice choice) {
    return gauge_m0(v, choice) * solve_m_minus(v).inverse_unipotent() * gauge_m_plus(v);
}

LegOp gauge_m_inverse(const RepSpace& v, DiagonalChoice choice) {
    return gauge_m_plus(v).inverse_unipotent() * solve_m_minus(v) *
           gauge_m0_inverse(v, choice);
}

LegOp fund_m_plus(const Session& s) {
    const int n = s.rank();
    RepSpace f = RepSpace::fundamental(s);
    LegOp r = LegOp::identity(&s, {f});
    for (int i = 1; i <= n; ++i) {
        // elementary symmetric sums of nu_{i+1}^-1 .. nu_{n+1}^-1
        std::vector<Scalar> elem(n + 2 - i, Scalar::zero(s));
        elem[0] = Scalar::one(s);
        for (int t = i + 1; t <= n + 1; ++t)
            for (int m = t - i; m >= 1; --m)
                elem[m] += elem[m - 1] * Scalar::nu_pow(s, t, -1);
        for (int j = i + 1; j <= n + 1; ++j) {
            Rat sign = (j - i) % 2 == 0 ? Rat(1) : Rat(-1);
            Scalar c = Scalar::rational(s, sign) *
                       Scalar::qpow(s, Rat(-(j - i) * (j + i - 3), 2 * (n + 1))) *
                       elem[j - i];
            r.set(i - 1, j - 1, std::move(c));
        }
    }
    return r;
}

LegOp fund_m_plus_inverse(const Session& s) {
    const int n = s.rank();
    RepSpace f = RepSpace::fundamental(s);
    LegOp r = LegOp::identity(&s, {f});
    for (int j = 2; j <= n + 1; ++j) {
        // complete homogeneous sums of nu_j^-1 .. nu_{n+1}^-1
        std::vector<Scalar> full(j, Scalar::zero(s));
        full[0] = Scalar::one(s);
        for (int t = j; t <= n + 1; ++t)
            for (int m = 1; m <= j - 1; ++m)
                full[m] += full[m - 1] * Scalar::nu_pow(s, t, -1);
        for (int i = 1; i < j; ++i) {
            Scalar c = Scalar::qpow(s, Rat(-(j - i) * (j + i - 3), 2 * (n + 1))) *
                       full[j - i];
            r.set(i - 1, j - 1, std::move(c));
        }
    }
    return r;
}

LegOp fund_m_minus(const Session& s) {
    const int n = s.rank();
    RepSpace f = RepSpace::fundamental(s);
    LegOp r = LegOp::identity(&s, {f});
    Scalar one = Scalar::one(s);
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n + 1; ++j) {
            Scalar c = Scalar::nu_pow(s, i, j - i) *
                       Scalar::qpow(s, Rat((j - i) * (j + i - 3), 2 * (n + 1)));
            for (int t = i + 1; t <= j; ++t)
                c /= one - Scalar::nu_pow(s, i, 1) * Scalar::nu_pow(s, t, -1);
            r.set(j - 1, i - 1, std::move(c));
        }
    return r;
}

LegOp fund_m_minus_inverse(const Session& s) {
    const int n = s.rank();
    RepSpace f = RepSpace::fundamental(s);
    LegOp r = LegOp::identity(&s, {f});
    Scalar one = Scalar::one(s);
    for (int i = 2; i <= n + 1; ++i)
        for (int j = 1; j < i; ++j) {
            Scalar c = Scalar::nu_pow(s, i, i - j) *
                       Scalar::qpow(s, Rat((i - j) * (j + i - 3), 2 * (n + 1)));
            for (int t = j; t <= i - 1; ++t)
                c /= one - Scalar::nu_pow(s, i, 1) * Scalar::nu_pow(s, t, -1);
            r.set(i - 1, j - 1, std::move(c));
        }
    return r;
}

LegOp fund_m_inverse(const Session& s) {
    const int n = s.rank();
    RepSpace f = RepSpace::fundamental(s);
    LegOp d(&s, {f});
    LegOp vand(&s, {f});
    LegOp u(&s, {f});
    Scalar one = Scalar::one(s);
    for (int i = 1; i <= n + 1; ++i) {
        d.set(i - 1, i - 1, Scalar::qpow(s, Rat(i * i - 3 * i, 2 * (n + 1))));
        for (int j = 1; j <= n + 1; ++j)
            vand.set(i - 1, j - 1, Scalar::nu_pow(s, j, i - 1));
        Scalar c = Scalar::nu_pow(s, i, 1 - i);
        for (int k = 2; k <= n + 1; ++k) {
            Rat e = Rat(i <= k - 1 ? 1 : 0) - Rat(k - 1, n + 1);
            c *= Scalar::nu_pow(s, k, -e / 2) * Scalar::qpow(s, (e * e) / 2);
        }
        for (int t = i + 1; t <= n + 1; ++t)
            c /= one - Scalar::nu_pow(s, i, 1) * Scalar::nu_pow(s, t, -1);
        u.set(i - 1, i - 1, std::move(c));
    }
    return d * vand * u * d.inverse_diagonal();
}

} // namespace qcg
