#pragma once

#include <complex>
#include <map>
#include <stdexcept>
#include <string>

#include "qcg/poly.hpp"

namespace qcg {

struct DivisionByZero : std::runtime_error {
    DivisionByZero() : std::runtime_error("division by zero scalar") {}
};

struct PoleAtSamplePoint : std::runtime_error {
    PoleAtSamplePoint() : std::runtime_error("denominator vanishes at sample point") {}
};

// Element of the rational-function field in q and nu~_1..nu~_n (plus any
// auxiliary session variables), with exponents on the 1/unit grid. Kept as
// numerator and factored denominator; equality is exact.
class Scalar {
public:
    Scalar() = default;

    static Scalar zero(const Session& s) { return from_poly(Poly(s.nvars()), s.unit()); }
    static Scalar one(const Session& s) { return rational(s, Rat(1)); }
    static Scalar rational(const Session& s, const Rat& c) {
        return from_poly(Poly::constant(s.nvars(), c), s.unit());
    }
    static Scalar from_poly(Poly p, int unit);
    // var^r for rational r on the exponent grid
    static Scalar var_pow(const Session& s, int var, const Rat& r);
    static Scalar qpow(const Session& s, const Rat& r) { return var_pow(s, s.q_var(), r); }
    static Scalar nu_tilde_pow(const Session& s, int i, const Rat& r) {
        return var_pow(s, s.nu_tilde_var(i), r);
    }
    // nu_i = nu~_i^(2(n+1)), with nu_{n+1} = (nu~_1...nu~_n)^(-2(n+1))
    static Scalar nu_pow(const Session& s, int i, const Rat& r);

    int nvars() const { return num_.nvars(); }
    int unit() const { return unit_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const;
    bool is_rational() const { return den_.empty() && num_.is_constant(); }
    const Poly& numerator() const { return num_; }
    const std::map<Poly, int>& denominator() const { return den_; }

    Scalar operator-() const;
    Scalar inverse() const;
    Scalar pow(long k) const;

    friend Scalar operator+(const Scalar& a, const Scalar& b);
    friend Scalar operator-(const Scalar& a, const Scalar& b);
    friend Scalar operator*(const Scalar& a, const Scalar& b);
    friend Scalar operator/(const Scalar& a, const Scalar& b);
    Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
    Scalar& operator-=(const Scalar& b) { return *this = *this - b; }
    Scalar& operator*=(const Scalar& b) { return *this = *this * b; }
    Scalar& operator/=(const Scalar& b) { return *this = *this / b; }

    friend bool operator==(const Scalar& a, const Scalar& b) { return (a - b).is_zero(); }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    std::complex<double> eval_at(const std::vector<std::complex<double>>& vals) const;

    std::string to_string(const Session& s) const;

private:
    void reduce();
    void divide_den_into(Poly& acc) const;

    Poly num_;
    std::map<Poly, int> den_;
    int unit_ = 0;
};

// [z]_q = (q^z - q^-z)/(q - q^-1) and (z)_q = q^(z-1) [z]_q, on the base
// q^d (d = 1 for every root of sl(n+1))
Scalar q_bracket(const Session& s, long z, int d = 1);
Scalar q_paren(const Session& s, long z, int d = 1);
Scalar q_paren_factorial(const Session& s, long m, int d = 1);

// whether c lies in the subfield generated by q (on its grid) and the
// whole powers nu_1..nu_{n+1}, i.e. uses no fractional nu powers
bool is_nu_rational(const Session& s, const Scalar& c);

} // namespace qcg
