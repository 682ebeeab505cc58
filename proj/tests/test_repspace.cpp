#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qcg/legop.hpp"
#include "qcg/repspace.hpp"

using namespace qcg;

namespace {

// [e_i, f_j] = delta_ij (q^{h_i} - q^{-h_i})/(q - q^-1)
bool commutation_holds(const Session& s, const RepSpace& rep) {
    Scalar dq = Scalar::qpow(s, Rat(1)) - Scalar::qpow(s, Rat(-1));
    for (int i = 1; i <= s.rank(); ++i)
        for (int j = 1; j <= s.rank(); ++j) {
            LegOp lhs = rep.e(i) * rep.f(j) - rep.f(j) * rep.e(i);
            if (i != j) {
                if (!lhs.is_zero())
                    return false;
                continue;
            }
            LegOp qh = diag_q(rep, [&](const Weight& w) { return Rat(w.h[i - 1]); });
            LegOp qhm = diag_q(rep, [&](const Weight& w) { return Rat(-w.h[i - 1]); });
            LegOp rhs = (qh - qhm).scaled(dq.inverse());
            if (!(lhs == rhs))
                return false;
        }
    return true;
}

LegOp serre_sum(const Session& s, const RepSpace& rep, bool raising, int i, int j) {
    // sum_k (-1)^k / ([k]! [1-a-k]!) x_i^{1-a-k} x_j x_i^k with a = a_ij
    int a = (i == j) ? 2 : (std::abs(i - j) == 1 ? -1 : 0);
    int top = 1 - a;
    auto& xi = raising ? rep.e(i) : rep.f(i);
    auto& xj = raising ? rep.e(j) : rep.f(j);
    auto bracket_fact = [&](int m) {
        Scalar acc = Scalar::one(s);
        for (int k = 2; k <= m; ++k)
            acc *= q_bracket(s, k);
        return acc;
    };
    LegOp acc(&s, xi.legs());
    for (int k = 0; k <= top; ++k) {
        LegOp term = LegOp::identity(&s, xi.legs());
        for (int m = 0; m < top - k; ++m)
            term = term * xi;
        term = term * xj;
        for (int m = 0; m < k; ++m)
            term = term * xi;
        Scalar c = (bracket_fact(k) * bracket_fact(top - k)).inverse();
        if (k % 2 == 1)
            c = -c;
        acc = acc + term.scaled(c);
    }
    return acc;
}

bool serre_holds(const Session& s, const RepSpace& rep) {
    for (int i = 1; i <= s.rank(); ++i)
        for (int j = 1; j <= s.rank(); ++j) {
            if (i == j)
                continue;
            if (!serre_sum(s, rep, true, i, j).is_zero())
                return false;
            if (!serre_sum(s, rep, false, i, j).is_zero())
                return false;
        }
    return true;
}

} // namespace

TEST_CASE("fundamental representation matrices and weights") {
    Session s(1);
    RepSpace v = RepSpace::fundamental(s);
    CHECK(v.dim() == 2);
    CHECK(v.e(1).at(0, 1).is_one());
    CHECK(v.e(1).nnz() == 1);
    CHECK(v.f(1).at(1, 0).is_one());
    CHECK(v.weight(0).h == std::vector<int>{1});
    CHECK(v.weight(1).h == std::vector<int>{-1});
    CHECK(v.weight(0).two_rho == 1);
    CHECK(v.weight(1).two_rho == -1);
}

TEST_CASE("zeta eigenvalues on the fundamental") {
    Session s(2);
    RepSpace v = RepSpace::fundamental(s);
    CHECK(v.weight(0).zeta[0] == Rat(2, 3));
    CHECK(v.weight(1).zeta[0] == Rat(-1, 3));
    CHECK(v.weight(2).zeta[0] == Rat(-1, 3));
    CHECK(v.weight(0).zeta[1] == Rat(1, 3));
    CHECK(v.weight(1).zeta[1] == Rat(1, 3));
    CHECK(v.weight(2).zeta[1] == Rat(-2, 3));
    // h_{(i)} = 2 zeta^{(i)} - zeta^{(i-1)} - zeta^{(i+1)}
    for (int b = 0; b < 3; ++b)
        for (int i = 1; i <= 2; ++i) {
            Rat lhs(v.weight(b).h[i - 1]);
            Rat rhs = 2 * v.weight(b).zeta[i - 1];
            if (i - 2 >= 0)
                rhs -= v.weight(b).zeta[i - 2];
            if (i < 2)
                rhs -= v.weight(b).zeta[i];
            CHECK(lhs == rhs);
        }
}

TEST_CASE("defining relations hold on tensor powers") {
    for (int n : {1, 2}) {
        Session s(n);
        RepSpace v = RepSpace::fundamental(s);
        RepSpace vv = RepSpace::tensor(v, v);
        CHECK(commutation_holds(s, v));
        CHECK(commutation_holds(s, vv));
        CHECK(serre_holds(s, v));
        CHECK(serre_holds(s, vv));
        if (n == 1) {
            RepSpace v4 = RepSpace::tensor_power(v, 3);
            CHECK(commutation_holds(s, v4));
        }
    }
}

TEST_CASE("cartan conjugation scales generators") {
    Session s(2);
    RepSpace v = RepSpace::fundamental(s);
    int cartan[2][2] = {{2, -1}, {-1, 2}};
    for (int j = 1; j <= 2; ++j) {
        LegOp qh = diag_q(v, [&](const Weight& w) { return Rat(w.h[j - 1]); });
        for (int i = 1; i <= 2; ++i) {
            LegOp lhs = qh * v.e(i) * qh.inverse_diagonal();
            LegOp rhs = v.e(i).scaled(Scalar::qpow(s, Rat(cartan[j - 1][i - 1])));
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("coproduct matrix on two tensor factors") {
    Session s(1);
    RepSpace v = RepSpace::fundamental(s);
    RepSpace vv = RepSpace::tensor(v, v);

    LegOp qh = diag_q(v, [&](const Weight& w) { return Rat(w.h[0]); });
    LegOp expected = tensor_op(v.e(1), qh) + tensor_op(LegOp::identity(&s, {v}), v.e(1));
    CHECK(vv.e(1) == expected.reshape({vv}));

    LegOp expected_f = tensor_op(v.f(1), LegOp::identity(&s, {v})) +
                       tensor_op(qh.inverse_diagonal(), v.f(1));
    CHECK(vv.f(1) == expected_f.reshape({vv}));
}

TEST_CASE("q^{2t_rho} is group-like") {
    for (int n : {1, 2}) {
        Session s(n);
        RepSpace v = RepSpace::fundamental(s);
        RepSpace vv = RepSpace::tensor(v, v);
        LegOp mu1 = diag_q(v, [](const Weight& w) { return Rat(w.two_rho); });
        LegOp mu2 = diag_q(vv, [](const Weight& w) { return Rat(w.two_rho); });
        CHECK(tensor_op(mu1, mu1).reshape({vv}) == mu2);
    }
}

TEST_CASE("weight blocks of two tensor factors") {
    Session s(1);
    RepSpace v = RepSpace::fundamental(s);
    RepSpace vv = RepSpace::tensor(v, v);
    std::map<int, int> blocks;
    for (int i = 0; i < vv.dim(); ++i)
        blocks[vv.weight(i).h[0]]++;
    CHECK(blocks == std::map<int, int>{{2, 1}, {0, 2}, {-2, 1}});
}

TEST_CASE("embedding bookkeeping") {
    Session s(1);
    RepSpace v = RepSpace::fundamental(s);
    std::vector<RepSpace> two = {v, v};
    std::vector<RepSpace> three = {v, v, v};
    LegOp a = v.e(1);
    LegOp b = v.f(1);
    LegOp id1 = LegOp::identity(&s, {v});

    CHECK(embed(a, {2}, two) == tensor_op(id1, a));
    CHECK(embed(tensor_op(a, b), {3, 1}, three) ==
          tensor_op(b, tensor_op(id1, a)));
    LegOp a1 = embed(a, {1}, two);
    LegOp b2 = embed(b, {2}, two);
    CHECK(a1 * b2 == b2 * a1);
}

TEST_CASE("leg permutation conjugates by the flip") {
    Session s(1);
    RepSpace v = RepSpace::fundamental(s);
    LegOp ab = tensor_op(v.e(1), v.f(1));
    CHECK(ab.permute_legs({1, 0}) == tensor_op(v.f(1), v.e(1)));
}

TEST_CASE("q-exponential basics") {
    Session s(1);
    RepSpace v = RepSpace::fundamental(s);
    LegOp e = v.e(1);

    LegOp qe = q_exponential(e, +1);
    CHECK(qe == LegOp::identity(&s, {v}) + e);

    // inverse law on a two-leg nilpotent
    Scalar dq = Scalar::qpow(s, Rat(1)) - Scalar::qpow(s, Rat(-1));
    LegOp z = tensor_op(v.e(1), v.f(1)).scaled(dq);
    LegOp lhs = q_exponential(z, +1) * q_exponential(-z, -1);
    CHECK(lhs.is_identity());

    CHECK_THROWS_AS((void)q_exponential(e + v.f(1), +1), NotNilpotent);
}

TEST_CASE("q-exponential of a q-commuting sum splits") {
    Session s(1);
    RepSpace v = RepSpace::fundamental(s);
    LegOp qh = diag_q(v, [](const Weight& w) { return Rat(w.h[0]); });
    LegOp x = tensor_op(v.e(1), qh);
    LegOp y = tensor_op(LegOp::identity(&s, {v}), v.e(1));
    REQUIRE(x * y == (y * x).scaled(Scalar::qpow(s, Rat(2))));
    CHECK(q_exponential(x + y, +1) == q_exponential(y, +1) * q_exponential(x, +1));
}

TEST_CASE("weight predicates") {
    Session s(1);
    RepSpace v = RepSpace::fundamental(s);
    LegOp qh = diag_q(v, [](const Weight& w) { return Rat(w.h[0]); });
    CHECK(is_zero_weight(qh));
    CHECK(is_zero_weight(tensor_op(v.e(1), v.f(1))));
    CHECK(!is_zero_weight(tensor_op(v.e(1), LegOp::identity(&s, {v}))));
    CHECK(is_strictly_upper(v.e(1)));
    CHECK(is_strictly_lower(v.f(1)));
    CHECK(!is_strictly_upper(v.f(1)));
}

TEST_CASE("inverses") {
    Session s(1);
    RepSpace v = RepSpace::fundamental(s);
    LegOp id = LegOp::identity(&s, {v});
    LegOp u = id + v.e(1).scaled(Scalar::qpow(s, Rat(3)));
    CHECK(u * u.inverse_unipotent() == id);

    LegOp swap = v.e(1) + v.f(1);
    CHECK(swap * swap.inverse() == id);

    // rank-one matrix [[1,1],[1,1]]
    LegOp ones(&s, {v});
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c)
            ones.set(r, c, Scalar::one(s));
    CHECK_THROWS_AS((void)ones.inverse(), SingularOperator);
}

TEST_CASE("trace") {
    Session s(1);
    RepSpace v = RepSpace::fundamental(s);
    LegOp qh = diag_q(v, [](const Weight& w) { return Rat(w.h[0]); });
    Scalar tr = qh.trace();
    CHECK(tr == q_bracket(s, 2));
}
