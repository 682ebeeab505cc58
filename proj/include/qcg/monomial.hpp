#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <vector>

namespace qcg {

// Laurent monomial: one exponent per session variable, in 1/unit steps.
// Exponents may be negative. Comparison is lexicographic, which gives the
// term order used throughout the polynomial layer.
struct Monomial {
    std::vector<std::int64_t> e;

    explicit Monomial(int nvars = 0) : e(nvars, 0) {}

    bool is_one() const {
        for (auto x : e)
            if (x != 0)
                return false;
        return true;
    }

    friend Monomial operator*(const Monomial& a, const Monomial& b) {
        Monomial r(static_cast<int>(a.e.size()));
        for (std::size_t i = 0; i < a.e.size(); ++i)
            r.e[i] = a.e[i] + b.e[i];
        return r;
    }

    friend Monomial operator/(const Monomial& a, const Monomial& b) {
        Monomial r(static_cast<int>(a.e.size()));
        for (std::size_t i = 0; i < a.e.size(); ++i)
            r.e[i] = a.e[i] - b.e[i];
        return r;
    }

    Monomial pow(std::int64_t k) const {
        Monomial r(static_cast<int>(e.size()));
        for (std::size_t i = 0; i < e.size(); ++i)
            r.e[i] = e[i] * k;
        return r;
    }

    Monomial inverse() const { return pow(-1); }

    // gcd of all exponents, sign-adjusted so that scaling the primitive
    // direction by it recovers *this; 0 for the trivial monomial.
    std::int64_t exponent_gcd() const {
        std::int64_t g = 0;
        for (auto x : e)
            g = std::gcd(g, x < 0 ? -x : x);
        return g;
    }

    friend auto operator<=>(const Monomial& a, const Monomial& b) {
        return a.e <=> b.e;
    }
    friend bool operator==(const Monomial& a, const Monomial& b) = default;
};

} // namespace qcg
