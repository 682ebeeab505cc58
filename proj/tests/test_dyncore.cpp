#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <vector>

#include "qcg/dyncore.hpp"
#include "qcg/rmatrix.hpp"

using namespace qcg;

namespace {

Scalar nu_ratio(const Session& s, int i, int j) {
    return Scalar::nu_pow(s, i, Rat(1)) * Scalar::nu_pow(s, j, Rat(-1));
}

// deviation from the identity strictly raises leg 1 and strictly lowers leg 2
bool one_plus_upper_lower(const LegOp& op) {
    const Session& s = op.session();
    LegOp dev = op - LegOp::identity(&s, op.legs());
    for (const auto& [rc, v] : dev.entries()) {
        auto r = op.unflatten(rc.first);
        auto c = op.unflatten(rc.second);
        auto up = root_coords(s, op.legs()[0].weight(r[0]), op.legs()[0].weight(c[0]));
        auto dn = root_coords(s, op.legs()[1].weight(c[1]), op.legs()[1].weight(r[1]));
        Rat su(0), sd(0);
        for (const Rat& x : up) {
            if (x < 0) return false;
            su += x;
        }
        for (const Rat& x : dn) {
            if (x < 0) return false;
            sd += x;
        }
        if (su == 0 || sd == 0) return false;
    }
    return true;
}

bool shift_equation_holds(const RootVectors& rv, const LegOp& f) {
    const RepSpace& a = f.legs()[0];
    const RepSpace& b = f.legs()[1];
    std::vector<RepSpace> two{a, b};
    LegOp b2 = embed(dyn_cartan(b, Rat(1)), {2}, two);
    return f * b2 == unipotent_R(rv, a, b).inverse_unipotent() * b2 * f;
}

} // namespace

TEST_CASE("dynamical Cartan element is a scaled nu diagonal in the fundamental") {
    for (int n : {1, 2, 3}) {
        Session s(n);
        RepSpace f = RepSpace::fundamental(s);
        LegOp expect(&s, {f});
        for (int i = 1; i <= n + 1; ++i)
            expect.set(i - 1, i - 1,
                       Scalar::qpow(s, Rat(n, n + 1)) * Scalar::nu_pow(s, i, Rat(1)));
        CHECK(dyn_cartan(f, Rat(1)) == expect);
    }
}

TEST_CASE("dynamical Cartan powers compose") {
    Session s(2);
    RepSpace f = RepSpace::fundamental(s);
    RepSpace ff = RepSpace::tensor(f, f);
    for (const RepSpace& v : {f, ff}) {
        LegOp half = dyn_cartan(v, Rat(1, 2));
        CHECK(half * half == dyn_cartan(v, Rat(1)));
        CHECK(dyn_cartan(v, Rat(-1)) == dyn_cartan(v, Rat(1)).inverse_diagonal());
    }
}

TEST_CASE("coproduct of the dynamical Cartan element in its three forms") {
    for (int n : {1, 2}) {
        Session s(n);
        RepSpace f = RepSpace::fundamental(s);
        std::vector<RepSpace> two{f, f};
        LegOp delta = dyn_cartan(RepSpace::tensor(f, f), Rat(1)).reshape(two);
        LegOp b1 = embed(dyn_cartan(f, Rat(1)), {1}, two);
        LegOp b2 = embed(dyn_cartan(f, Rat(1)), {2}, two);
        LegOp k = cartan_K(f, f);
        CHECK(delta == b1 * b2 * k * k);
        CHECK(delta == dyn_shift(b1, 2) * b2);
        CHECK(delta == b1 * dyn_shift(b2, 1));
    }
    Session s(2);
    RepSpace f = RepSpace::fundamental(s);
    RepSpace ff = RepSpace::tensor(f, f);
    std::vector<RepSpace> two{ff, f};
    LegOp delta = dyn_cartan(RepSpace::tensor(ff, f), Rat(1)).reshape(two);
    LegOp b1 = embed(dyn_cartan(ff, Rat(1)), {1}, two);
    LegOp b2 = embed(dyn_cartan(f, Rat(1)), {2}, two);
    LegOp k = cartan_K(ff, f);
    CHECK(delta == b1 * b2 * k * k);
    CHECK(delta == dyn_shift(b1, 2) * b2);
}

TEST_CASE("shift along a fundamental leg multiplies nu by weight powers of q") {
    Session s(1);
    RepSpace f = RepSpace::fundamental(s);
    LegOp a(&s, {f});
    for (int i = 0; i < 2; ++i) a.set(i, i, Scalar::nu_pow(s, 1, Rat(1)));
    LegOp shifted = dyn_shift(a, 1);
    CHECK(shifted.at(0, 0) ==
          Scalar::nu_pow(s, 1, Rat(1)) * Scalar::qpow(s, Rat(1)));
    CHECK(shifted.at(1, 1) ==
          Scalar::nu_pow(s, 1, Rat(1)) * Scalar::qpow(s, Rat(-1)));
}

TEST_CASE("shift along a trivial leg changes nothing") {
    Session s(2);
    RepSpace f = RepSpace::fundamental(s);
    RepSpace t = RepSpace::trivial(s);
    LegOp a = embed(fund_dyn_F(s), {1, 2}, {f, f, t});
    CHECK(dyn_shift(a, 3) == a);
}

TEST_CASE("successive shifts combine like the tensor leg") {
    Session s(2);
    RepSpace f = RepSpace::fundamental(s);
    RepSpace ff = RepSpace::tensor(f, f);
    std::vector<RepSpace> three{f, f, f};
    LegOp d1(&s, {f});
    for (int i = 0; i < f.dim(); ++i)
        d1.set(i, i, Scalar::nu_pow(s, 1, Rat(1)) * Scalar::nu_pow(s, 2, Rat(-2)));
    LegOp a = embed(d1, {1}, three);
    LegOp via2then3 = dyn_shift(dyn_shift(a, 2), 3);
    CHECK(via2then3 == dyn_shift(dyn_shift(a, 3), 2));
    CHECK(via2then3 == dyn_shift(a.reshape({f, ff}), 2).reshape(three));
}

TEST_CASE("triangular solve reproduces the closed cocycle in the fundamental") {
    for (int n : {1, 2, 3}) {
        Session s(n);
        RootVectors rv(s);
        RepSpace f = RepSpace::fundamental(s);
        CHECK(solve_abrr(rv, f, f) == fund_dyn_F(s));
    }
}

TEST_CASE("solved cocycle satisfies the linear shift equation exactly") {
    for (int n : {1, 2, 3}) {
        Session s(n);
        RootVectors rv(s);
        RepSpace f = RepSpace::fundamental(s);
        CHECK(shift_equation_holds(rv, solve_abrr(rv, f, f)));
    }
    Session s(2);
    RootVectors rv(s);
    RepSpace f = RepSpace::fundamental(s);
    RepSpace ff = RepSpace::tensor(f, f);
    CHECK(shift_equation_holds(rv, solve_abrr(rv, ff, f)));
    CHECK(shift_equation_holds(rv, solve_abrr(rv, f, ff)));
}

TEST_CASE("solved cocycle has the triangular zero-weight shape") {
    Session s(2);
    RootVectors rv(s);
    RepSpace f = RepSpace::fundamental(s);
    RepSpace ff = RepSpace::tensor(f, f);
    for (const LegOp& x : {solve_abrr(rv, f, f), solve_abrr(rv, ff, f)}) {
        CHECK(is_zero_weight(x));
        CHECK(one_plus_upper_lower(x));
    }
    RepSpace t = RepSpace::trivial(s);
    CHECK(solve_abrr(rv, t, f).is_identity());
    CHECK(solve_abrr(rv, f, t).is_identity());
}

TEST_CASE("any extra strictly triangular term breaks the shift equation") {
    Session s1(1);
    RootVectors rv1(s1);
    RepSpace f1 = RepSpace::fundamental(s1);
    LegOp f = solve_abrr(rv1, f1, f1);
    f.add_to(1, 2, Scalar::one(s1));
    CHECK(!shift_equation_holds(rv1, f));

    Session s(2);
    RootVectors rv(s);
    RepSpace f2 = RepSpace::fundamental(s);
    LegOp g = solve_abrr(rv, f2, f2);
    g.add_to(2, 6, Scalar::one(s));
    CHECK(!shift_equation_holds(rv, g));
}

TEST_CASE("dynamical R-matrix matches its closed form in the fundamental") {
    for (int n : {1, 2, 3}) {
        Session s(n);
        RootVectors rv(s);
        RepSpace f = RepSpace::fundamental(s);
        LegOp r = dyn_R(rv, f, f);
        CHECK(r == fund_dyn_R(s));
        CHECK(is_zero_weight(r));
    }
}

TEST_CASE("closed dynamical R-matrix carries the squared correction on the diagonal") {
    Session s(2);
    Scalar dq = Scalar::qpow(s, Rat(1)) - Scalar::qpow(s, Rat(-1));
    Scalar one = Scalar::one(s);
    Scalar ratio = nu_ratio(s, 2, 1);
    LegOp r = fund_dyn_R(s);
    // entry E_22 (x) E_11 of the 9x9 matrix
    CHECK(r.at(1 * 3 + 0, 1 * 3 + 0) ==
          Scalar::qpow(s, Rat(-1, 3)) *
              (one - dq * dq * ratio / ((one - ratio) * (one - ratio))));
}

TEST_CASE("dynamical R-matrix satisfies the shifted braid equation") {
    for (int n : {1, 2}) {
        Session s(n);
        RootVectors rv(s);
        RepSpace f = RepSpace::fundamental(s);
        std::vector<RepSpace> three{f, f, f};
        LegOp r = dyn_R(rv, f, f);
        LegOp lhs = embed(r, {1, 2}, three) *
                    dyn_shift(embed(r, {1, 3}, three), 2) * embed(r, {2, 3}, three);
        LegOp rhs = dyn_shift(embed(r, {2, 3}, three), 1) *
                    embed(r, {1, 3}, three) * dyn_shift(embed(r, {1, 2}, three), 3);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("dynamical R-matrix obeys the linear exchange with the Cartan element") {
    for (int n : {1, 2}) {
        Session s(n);
        RootVectors rv(s);
        RepSpace f = RepSpace::fundamental(s);
        std::vector<RepSpace> two{f, f};
        LegOp r = dyn_R(rv, f, f);
        LegOp b2 = embed(dyn_cartan(f, Rat(1)), {2}, two);
        LegOp k = cartan_K(f, f);
        LegOp r21 = r.permute_legs({1, 0});
        CHECK(r * b2 == b2 * k * k * r21.inverse());
    }
}

TEST_CASE("solved cocycle satisfies the shifted coproduct identity") {
    for (int n : {1, 2}) {
        Session s(n);
        RootVectors rv(s);
        RepSpace f = RepSpace::fundamental(s);
        RepSpace ff = RepSpace::tensor(f, f);
        std::vector<RepSpace> three{f, f, f};
        LegOp fx = solve_abrr(rv, f, f);
        LegOp lhs = solve_abrr(rv, ff, f).reshape(three) *
                    dyn_shift(embed(fx, {1, 2}, three), 3);
        LegOp rhs = solve_abrr(rv, f, ff).reshape(three) * embed(fx, {2, 3}, three);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("truncated product converges geometrically to the solved cocycle") {
    Session s(1);
    RootVectors rv(s);
    RepSpace f = RepSpace::fundamental(s);
    // q = 0.7 and nu_1 = 0.5, entered through its fourth root
    std::vector<std::complex<double>> point{0.7, std::pow(0.5, 0.25)};
    auto exact = solve_abrr(rv, f, f).eval_at(point);
    auto residual = [&](int depth) {
        auto approx = truncated_dyn_F(rv, f, f, depth, point);
        for (std::size_t r = 0; r < approx.size(); ++r)
            for (std::size_t c = 0; c < approx.size(); ++c) approx[r][c] -= exact[r][c];
        return max_abs(approx);
    };
    CHECK(residual(40) <= 1e-10);
    // one factor already matches to second order in the convergence ratio
    double r0 = residual(0);
    CHECK(r0 > 0);
    CHECK(r0 < 0.25);
    // each extra factor shrinks the residual by about nu_1^-2 = 4
    for (int d = 1; d <= 6; ++d) {
        double ratio = residual(d - 1) / residual(d);
        CHECK(ratio > 3.0);
        CHECK(ratio < 5.0);
    }
}
