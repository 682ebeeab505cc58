#include "qcg/rootvec.hpp"

namespace qcg {

std::vector<PositiveRoot> normal_order(int n) {
    std::vector<PositiveRoot> r;
    for (int j = 1; j <= n; ++j)
        for (int i = 1; i <= j; ++i)
            r.push_back({i, j});
    return r;
}

RootVectors::RootVectors(const Session& s, BracketConvention c)
    : s_(&s), c_(c), order_(normal_order(s.rank())) {
    RepSpace fund = RepSpace::fundamental(s);
    for (auto [i, j] : order_) {
        LegOp expect_e(&s, {fund});
        expect_e.set(i - 1, j, Scalar::one(s));
        LegOp expect_f(&s, {fund});
        expect_f.set(j, i - 1, Scalar::one(s));
        if (!(e(fund, i, j) == expect_e) || !(f(fund, i, j) == expect_f))
            throw OracleMismatch("composite root generators do not reduce to "
                                 "matrix units in the fundamental module");
    }
}

LegOp RootVectors::e(const RepSpace& v, int i, int j) const {
    if (i == j)
        return v.e(i);
    LegOp lo = e(v, i, j - 1);
    const LegOp& si = v.e(j);
    Scalar qinv = Scalar::qpow(*s_, Rat(-1));
    if (c_ == BracketConvention::lower_then_simple)
        return lo * si - (si * lo).scaled(qinv);
    return si * lo - (lo * si).scaled(qinv);
}

LegOp RootVectors::f(const RepSpace& v, int i, int j) const {
    if (i == j)
        return v.f(i);
    LegOp lo = f(v, i, j - 1);
    const LegOp& si = v.f(j);
    Scalar qq = Scalar::qpow(*s_, Rat(1));
    if (c_ == BracketConvention::lower_then_simple)
        return si * lo - (lo * si).scaled(qq);
    return lo * si - (si * lo).scaled(qq);
}

std::vector<int> longest_word(int n) {
    std::vector<int> w;
    for (int j = 1; j <= n; ++j)
        for (int i = j; i >= 1; --i)
            w.push_back(i);
    return w;
}

std::vector<int> coxeter_word(int n) {
    std::vector<int> w(n);
    for (int i = 0; i < n; ++i)
        w[i] = i + 1;
    return w;
}

LegOp weyl_hat(const RepSpace& v, int i) {
    LegOp ef = q_exponential(v.f(i), -1);
    LegOp ee = q_exponential(-v.e(i), -1);
    LegOp quarter = diag_q(v, [&](const Weight& w) {
        return Rat(-w.h[i - 1] * w.h[i - 1], 4);
    });
    LegOp half = diag_q(v, [&](const Weight& w) { return Rat(-w.h[i - 1], 2); });
    return ef * quarter * ee * quarter * ef * half;
}

LegOp weyl_hat(const RepSpace& v, const std::vector<int>& word) {
    LegOp r = LegOp::identity(&v.session(), {v});
    for (int i : word)
        r = r * weyl_hat(v, i);
    return r;
}

LegOp weyl_hat_longest(const RepSpace& v) {
    return weyl_hat(v, longest_word(v.rank()));
}

} // namespace qcg
