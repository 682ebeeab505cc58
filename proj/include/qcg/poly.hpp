#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qcg/monomial.hpp"
#include "qcg/session.hpp"

namespace qcg {

using Rat = boost::multiprecision::cpp_rational;
using Int = boost::multiprecision::cpp_int;

struct Term {
    Monomial m;
    Rat c;

    friend bool operator==(const Term& a, const Term& b) {
        return a.m == b.m && a.c == b.c;
    }
};

// Sparse Laurent polynomial over Q. Terms are kept sorted in strictly
// decreasing lexicographic monomial order with nonzero coefficients.
class Poly {
public:
    Poly() = default;
    explicit Poly(int nvars) : nvars_(nvars) {}

    static Poly constant(int nvars, const Rat& c);
    static Poly monomial(Monomial m, const Rat& c);
    // builds from unsorted/duplicated terms
    static Poly collect(int nvars, std::vector<Term> raw);

    int nvars() const { return nvars_; }
    bool is_zero() const { return t_.empty(); }
    bool is_constant() const { return t_.empty() || (t_.size() == 1 && t_[0].m.is_one()); }
    bool is_monomial() const { return t_.size() == 1; }
    std::size_t size() const { return t_.size(); }
    const std::vector<Term>& terms() const { return t_; }

    const Term& leading() const { return t_.front(); }
    const Term& trailing() const { return t_.back(); }

    // componentwise minimum of all exponents (the largest monomial m such
    // that this/m has only nonnegative exponents); zero polynomial gives 1
    Monomial content_monomial() const;

    Poly neg() const;
    Poly mul_monomial(const Monomial& m) const;
    Poly mul_rat(const Rat& c) const;

    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);

    friend bool operator==(const Poly& a, const Poly& b) {
        return a.nvars_ == b.nvars_ && a.t_ == b.t_;
    }
    // total order usable as an associative-container key
    friend bool operator<(const Poly& a, const Poly& b);

    std::complex<double> eval(const std::vector<std::complex<double>>& vals, int unit) const;

    std::string to_string(const Session& s) const;

private:
    int nvars_ = 0;
    std::vector<Term> t_;
};

// Exact division. Returns a/b when b divides a in the Laurent ring,
// std::nullopt otherwise (also when the attempt exceeds an internal step
// budget, which only costs a missed cancellation, never correctness).
std::optional<Poly> try_divide(const Poly& a, const Poly& b);

// Multiplicative decomposition of a nonzero polynomial into a unit
// (rational coefficient times a Laurent monomial) and canonical factors.
// Canonical form: no monomial content, lexicographically greatest term has
// coefficient 1. Binomials Y - 1 split along Y = Z^2 into (Z-1)(Z+1) as
// long as Z keeps whole-variable exponents, so commensurable denominators
// share factors; anything else is kept whole.
struct FactorSplit {
    Rat unit_coeff;
    Monomial unit_mono;
    std::vector<std::pair<Poly, int>> factors;
};
FactorSplit split_factors(const Poly& d, int unit);

} // namespace qcg
