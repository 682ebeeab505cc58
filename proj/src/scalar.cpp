#include "qcg/scalar.hpp"

#include <sstream>

namespace qcg {

Scalar Scalar::from_poly(Poly p, int unit) {
    Scalar r;
    r.num_ = std::move(p);
    r.unit_ = unit;
    return r;
}

Scalar Scalar::var_pow(const Session& s, int var, const Rat& r) {
    Rat scaled = r * s.unit();
    Int den = boost::multiprecision::denominator(scaled);
    if (den != 1)
        throw std::invalid_argument("exponent off the 1/" + std::to_string(s.unit()) +
                                    " grid");
    Monomial m(s.nvars());
    m.e[var] = boost::multiprecision::numerator(scaled).convert_to<std::int64_t>();
    return from_poly(Poly::monomial(std::move(m), Rat(1)), s.unit());
}

Scalar Scalar::nu_pow(const Session& s, int i, const Rat& r) {
    int n = s.rank();
    if (i < 1 || i > n + 1)
        throw std::out_of_range("nu index");
    Rat k = r * 2 * (n + 1);
    if (i <= n)
        return nu_tilde_pow(s, i, k);
    Scalar acc = one(s);
    for (int j = 1; j <= n; ++j)
        acc = acc * nu_tilde_pow(s, j, -k);
    return acc;
}

bool Scalar::is_one() const {
    if (!den_.empty())
        return false;
    return num_.is_constant() && !num_.is_zero() && num_.leading().c == 1;
}

void Scalar::reduce() {
    if (num_.is_zero()) {
        den_.clear();
        return;
    }
    for (auto it = den_.begin(); it != den_.end();) {
        bool erased = false;
        while (it->second > 0) {
            auto q = try_divide(num_, it->first);
            if (!q)
                break;
            num_ = std::move(*q);
            if (--it->second == 0) {
                it = den_.erase(it);
                erased = true;
                break;
            }
        }
        if (!erased)
            ++it;
    }
}

void Scalar::divide_den_into(Poly& acc) const {
    for (auto& [f, m] : den_)
        for (int k = 0; k < m; ++k)
            acc = acc * f;
}

Scalar Scalar::operator-() const {
    Scalar r = *this;
    r.num_ = r.num_.neg();
    return r;
}

Scalar Scalar::inverse() const {
    if (num_.is_zero())
        throw DivisionByZero();
    Scalar r;
    r.unit_ = unit_;
    r.num_ = Poly::constant(num_.nvars(), Rat(1));
    divide_den_into(r.num_);

    FactorSplit fs = split_factors(num_, unit_);
    r.num_ = r.num_.mul_monomial(fs.unit_mono.inverse()).mul_rat(Rat(1) / fs.unit_coeff);
    for (auto& [f, m] : fs.factors)
        r.den_[f] += m;
    r.reduce();
    return r;
}

Scalar Scalar::pow(long k) const {
    if (k < 0)
        return inverse().pow(-k);
    Scalar acc = from_poly(Poly::constant(num_.nvars(), Rat(1)), unit_);
    Scalar base = *this;
    while (k > 0) {
        if (k & 1)
            acc = acc * base;
        base = (k >>= 1) ? base * base : base;
    }
    return acc;
}

Scalar operator+(const Scalar& a, const Scalar& b) {
    if (a.unit_ != b.unit_ || a.num_.nvars() != b.num_.nvars())
        throw std::invalid_argument("scalar session mismatch");
    Scalar r;
    r.unit_ = a.unit_;

    // numerators scaled by the complementary parts of the common denominator
    Poly na = a.num_;
    Poly nb = b.num_;
    for (auto& [f, mb] : b.den_) {
        auto it = a.den_.find(f);
        int ma = it == a.den_.end() ? 0 : it->second;
        for (int k = ma; k < mb; ++k)
            na = na * f;
    }
    for (auto& [f, ma] : a.den_) {
        auto it = b.den_.find(f);
        int mb = it == b.den_.end() ? 0 : it->second;
        for (int k = mb; k < ma; ++k)
            nb = nb * f;
    }
    r.num_ = na + nb;
    r.den_ = a.den_;
    for (auto& [f, mb] : b.den_) {
        int& m = r.den_[f];
        m = std::max(m, mb);
    }
    r.reduce();
    return r;
}

Scalar operator-(const Scalar& a, const Scalar& b) {
    return a + (-b);
}

Scalar operator*(const Scalar& a, const Scalar& b) {
    if (a.unit_ != b.unit_ || a.num_.nvars() != b.num_.nvars())
        throw std::invalid_argument("scalar session mismatch");
    Scalar r;
    r.unit_ = a.unit_;
    r.num_ = a.num_ * b.num_;
    r.den_ = a.den_;
    for (auto& [f, m] : b.den_)
        r.den_[f] += m;
    r.reduce();
    return r;
}

Scalar operator/(const Scalar& a, const Scalar& b) {
    return a * b.inverse();
}

std::complex<double> Scalar::eval_at(const std::vector<std::complex<double>>& vals) const {
    std::complex<double> v = num_.eval(vals, unit_);
    for (auto& [f, m] : den_) {
        std::complex<double> fv = f.eval(vals, unit_);
        if (std::abs(fv) < 1e-12)
            throw PoleAtSamplePoint();
        for (int k = 0; k < m; ++k)
            v /= fv;
    }
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
        throw PoleAtSamplePoint();
    return v;
}

std::string Scalar::to_string(const Session& s) const {
    if (den_.empty())
        return num_.to_string(s);
    std::ostringstream out;
    if (num_.size() > 1)
        out << "(" << num_.to_string(s) << ")";
    else
        out << num_.to_string(s);
    out << " / ";
    bool first = true;
    for (auto& [f, m] : den_) {
        if (!first)
            out << " * ";
        first = false;
        out << "(" << f.to_string(s) << ")";
        if (m > 1)
            out << "^" << m;
    }
    return out.str();
}

Scalar q_bracket(const Session& s, long z, int d) {
    if (z < 0)
        return -q_bracket(s, -z, d);
    Scalar acc = Scalar::zero(s);
    for (long k = 0; k < z; ++k)
        acc += Scalar::qpow(s, Rat(d * (z - 1 - 2 * k)));
    return acc;
}

Scalar q_paren(const Session& s, long z, int d) {
    if (z < 0) {
        // (z)_q = (1 - q^{2z})/(1 - q^2) stays valid for negative z
        Scalar one = Scalar::one(s);
        Scalar q2 = Scalar::qpow(s, Rat(2 * d));
        return (one - Scalar::qpow(s, Rat(2 * d * z))) / (one - q2);
    }
    Scalar acc = Scalar::zero(s);
    for (long k = 0; k < z; ++k)
        acc += Scalar::qpow(s, Rat(2 * d * k));
    return acc;
}

Scalar q_paren_factorial(const Session& s, long m, int d) {
    Scalar acc = Scalar::one(s);
    for (long k = 2; k <= m; ++k)
        acc *= q_paren(s, k, d);
    return acc;
}

bool is_nu_rational(const Session& s, const Scalar& c) {
    // nu_i = nu~_i^(2(n+1)), so whole nu powers are the stored exponents
    // divisible by this
    const std::int64_t m = 2LL * (s.rank() + 1) * s.unit();
    const int nvars = c.numerator().nvars();

    // split a polynomial by the residue classes of its nu~ exponents
    auto split = [&](const Poly& p) {
        std::map<std::vector<std::int64_t>, std::vector<Term>> groups;
        for (const Term& t : p.terms()) {
            std::vector<std::int64_t> r(s.rank());
            for (int i = 1; i <= s.rank(); ++i)
                r[i - 1] = ((t.m.e[s.nu_tilde_var(i)] % m) + m) % m;
            groups[std::move(r)].push_back(t);
        }
        std::map<std::vector<std::int64_t>, Poly> out;
        for (auto& [key, terms] : groups)
            out.emplace(key, Poly::collect(nvars, std::move(terms)));
        return out;
    };

    Poly den = Poly::constant(nvars, Rat(1));
    for (const auto& [factor, mult] : c.denominator())
        for (int k = 0; k < mult; ++k) den = den * factor;

    // the fraction is nu-rational exactly when every class component of the
    // numerator is the same multiple of the matching denominator component,
    // which the cross products detect without dividing
    auto nparts = split(c.numerator());
    auto dparts = split(den);
    const auto& base = *dparts.begin();
    Poly zero(nvars);
    auto component = [&](const std::map<std::vector<std::int64_t>, Poly>& parts,
                         const std::vector<std::int64_t>& key) -> const Poly& {
        auto it = parts.find(key);
        return it == parts.end() ? zero : it->second;
    };
    const Poly& nbase = component(nparts, base.first);
    for (const auto& [key, np] : nparts)
        if ((np * base.second - nbase * component(dparts, key)).is_zero() == false)
            return false;
    for (const auto& [key, dp] : dparts)
        if ((component(nparts, key) * base.second - nbase * dp).is_zero() == false)
            return false;
    return true;
}

} // namespace qcg
