#include "qcg/poly.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace qcg {

Poly Poly::constant(int nvars, const Rat& c) {
    Poly p(nvars);
    if (c != 0)
        p.t_.push_back({Monomial(nvars), c});
    return p;
}

Poly Poly::monomial(Monomial m, const Rat& c) {
    Poly p(static_cast<int>(m.e.size()));
    if (c != 0)
        p.t_.push_back({std::move(m), c});
    return p;
}

Poly Poly::collect(int nvars, std::vector<Term> raw) {
    std::map<Monomial, Rat> acc;
    for (auto& t : raw) {
        if (static_cast<int>(t.m.e.size()) != nvars)
            throw std::invalid_argument("term arity mismatch");
        acc[t.m] += t.c;
    }
    Poly p(nvars);
    for (auto it = acc.rbegin(); it != acc.rend(); ++it)
        if (it->second != 0)
            p.t_.push_back({it->first, it->second});
    return p;
}

Monomial Poly::content_monomial() const {
    Monomial m(nvars_);
    if (t_.empty())
        return m;
    m = t_[0].m;
    for (std::size_t i = 1; i < t_.size(); ++i)
        for (std::size_t v = 0; v < m.e.size(); ++v)
            m.e[v] = std::min(m.e[v], t_[i].m.e[v]);
    return m;
}

Poly Poly::neg() const {
    Poly p(nvars_);
    p.t_.reserve(t_.size());
    for (auto& t : t_)
        p.t_.push_back({t.m, -t.c});
    return p;
}

Poly Poly::mul_monomial(const Monomial& m) const {
    Poly p(nvars_);
    p.t_.reserve(t_.size());
    for (auto& t : t_)
        p.t_.push_back({t.m * m, t.c});
    return p;
}

Poly Poly::mul_rat(const Rat& c) const {
    if (c == 0)
        return Poly(nvars_);
    Poly p(nvars_);
    p.t_.reserve(t_.size());
    for (auto& t : t_)
        p.t_.push_back({t.m, t.c * c});
    return p;
}

Poly operator+(const Poly& a, const Poly& b) {
    if (a.nvars_ != b.nvars_)
        throw std::invalid_argument("polynomial arity mismatch");
    Poly r(a.nvars_);
    r.t_.reserve(a.t_.size() + b.t_.size());
    std::size_t i = 0, j = 0;
    while (i < a.t_.size() && j < b.t_.size()) {
        auto ord = a.t_[i].m <=> b.t_[j].m;
        if (ord > 0) {
            r.t_.push_back(a.t_[i++]);
        } else if (ord < 0) {
            r.t_.push_back(b.t_[j++]);
        } else {
            Rat c = a.t_[i].c + b.t_[j].c;
            if (c != 0)
                r.t_.push_back({a.t_[i].m, std::move(c)});
            ++i;
            ++j;
        }
    }
    for (; i < a.t_.size(); ++i)
        r.t_.push_back(a.t_[i]);
    for (; j < b.t_.size(); ++j)
        r.t_.push_back(b.t_[j]);
    return r;
}

Poly operator-(const Poly& a, const Poly& b) {
    return a + b.neg();
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.nvars_ != b.nvars_)
        throw std::invalid_argument("polynomial arity mismatch");
    std::map<Monomial, Rat> acc;
    for (auto& ta : a.t_)
        for (auto& tb : b.t_)
            acc[ta.m * tb.m] += ta.c * tb.c;
    Poly r(a.nvars_);
    for (auto it = acc.rbegin(); it != acc.rend(); ++it)
        if (it->second != 0)
            r.t_.push_back({it->first, it->second});
    return r;
}

bool operator<(const Poly& a, const Poly& b) {
    if (a.nvars_ != b.nvars_)
        return a.nvars_ < b.nvars_;
    std::size_t k = std::min(a.t_.size(), b.t_.size());
    for (std::size_t i = 0; i < k; ++i) {
        if (a.t_[i].m != b.t_[i].m)
            return a.t_[i].m < b.t_[i].m;
        if (a.t_[i].c != b.t_[i].c)
            return a.t_[i].c < b.t_[i].c;
    }
    return a.t_.size() < b.t_.size();
}

std::complex<double> Poly::eval(const std::vector<std::complex<double>>& vals, int unit) const {
    if (static_cast<int>(vals.size()) != nvars_)
        throw std::invalid_argument("evaluation point arity mismatch");
    std::complex<double> acc = 0.0;
    for (auto& t : t_) {
        std::complex<double> term = t.c.convert_to<double>();
        for (std::size_t v = 0; v < t.m.e.size(); ++v) {
            if (t.m.e[v] == 0)
                continue;
            double xp = static_cast<double>(t.m.e[v]) / unit;
            term *= std::pow(vals[v], xp);
        }
        acc += term;
    }
    return acc;
}

std::string Poly::to_string(const Session& s) const {
    if (t_.empty())
        return "0";
    std::ostringstream out;
    bool first = true;
    for (auto& t : t_) {
        if (!first)
            out << " + ";
        first = false;
        out << t.c;
        for (std::size_t v = 0; v < t.m.e.size(); ++v) {
            if (t.m.e[v] == 0)
                continue;
            std::int64_t p = t.m.e[v];
            std::int64_t r = s.unit();
            std::int64_t g = std::gcd(p < 0 ? -p : p, r);
            p /= g;
            r /= g;
            out << " * " << s.var_name(static_cast<int>(v)) << "^{" << p;
            if (r != 1)
                out << "/" << r;
            out << "}";
        }
    }
    return out.str();
}

std::optional<Poly> try_divide(const Poly& a, const Poly& b) {
    if (b.is_zero())
        return std::nullopt;
    if (a.is_zero())
        return Poly(a.nvars());
    if (a.nvars() != b.nvars())
        return std::nullopt;
    if (b.is_monomial()) {
        Poly q = a.mul_monomial(b.leading().m.inverse());
        return q.mul_rat(Rat(1) / b.leading().c);
    }

    // In an exact quotient leading and trailing terms multiply, so every
    // quotient monomial lies lex-above low = tt(a)/tt(b), and the running
    // remainder (q_remaining * b) never has a term below tt(a). Violating
    // either bound proves non-divisibility.
    Monomial low = a.trailing().m / b.trailing().m;
    if (a.leading().m / b.leading().m < low)
        return std::nullopt;
    const Monomial floor_m = a.trailing().m;

    std::map<Monomial, Rat> rem;
    for (auto& t : a.terms())
        rem[t.m] = t.c;
    std::vector<Term> quot;

    // each step emits one quotient term, so this bounds the quotient size
    const std::size_t step_budget = 1000 + 10 * a.size();
    std::size_t steps = 0;
    while (!rem.empty()) {
        if (++steps > step_budget)
            return std::nullopt;
        if (rem.begin()->first < floor_m)
            return std::nullopt;
        auto lead = std::prev(rem.end());
        Monomial qm = lead->first / b.leading().m;
        if (qm < low)
            return std::nullopt;
        Rat qc = lead->second / b.leading().c;
        quot.push_back({qm, qc});
        for (auto& t : b.terms()) {
            Monomial m = qm * t.m;
            auto it = rem.find(m);
            Rat c = (it == rem.end() ? Rat(0) : it->second) - qc * t.c;
            if (c == 0) {
                if (it != rem.end())
                    rem.erase(it);
            } else if (it == rem.end()) {
                rem.emplace(std::move(m), std::move(c));
            } else {
                it->second = std::move(c);
            }
        }
    }
    return Poly::collect(a.nvars(), std::move(quot));
}

namespace {

// strips monomial content and scales the lex-leading coefficient to 1,
// accumulating what was removed into the unit of `out`
Poly make_canonical(const Poly& f, FactorSplit& out) {
    Monomial cont = f.content_monomial();
    Poly g = f.mul_monomial(cont.inverse());
    Rat lead = g.leading().c;
    out.unit_mono = out.unit_mono * cont;
    out.unit_coeff *= lead;
    return g.mul_rat(Rat(1) / lead);
}

void push_factor(FactorSplit& out, Poly f, int mult) {
    for (auto& [g, m] : out.factors) {
        if (g == f) {
            m += mult;
            return;
        }
    }
    out.factors.push_back({std::move(f), mult});
}

} // namespace

namespace {

bool halvable(const Monomial& y, int unit) {
    bool nontrivial = false;
    for (auto x : y.e) {
        if (x % 2 != 0)
            return false;
        if ((x / 2) % unit != 0)
            return false;
        if (x != 0)
            nontrivial = true;
    }
    return nontrivial;
}

} // namespace

FactorSplit split_factors(const Poly& d, int unit) {
    if (d.is_zero())
        throw std::invalid_argument("cannot factor zero");
    FactorSplit out;
    out.unit_coeff = 1;
    out.unit_mono = Monomial(d.nvars());

    if (d.is_monomial()) {
        out.unit_coeff = d.leading().c;
        out.unit_mono = d.leading().m;
        return out;
    }

    if (d.size() == 2) {
        const Term& hi = d.terms()[0];
        const Term& lo = d.terms()[1];
        if (lo.c == -hi.c) {
            // hi.c * lo.m * (Y - 1) with Y = hi.m/lo.m, then repeatedly
            // Y - 1 = (Z - 1)(Z + 1) for Y = Z^2
            out.unit_coeff = hi.c;
            out.unit_mono = lo.m;
            Monomial y = hi.m / lo.m;
            while (halvable(y, unit)) {
                Monomial z = y;
                for (auto& x : z.e)
                    x /= 2;
                std::vector<Term> plus = {{z, Rat(1)}, {Monomial(d.nvars()), Rat(1)}};
                push_factor(out, make_canonical(Poly::collect(d.nvars(), plus), out), 1);
                y = z;
            }
            std::vector<Term> core = {{y, Rat(1)}, {Monomial(d.nvars()), Rat(-1)}};
            push_factor(out, make_canonical(Poly::collect(d.nvars(), core), out), 1);
            return out;
        }
    }

    push_factor(out, make_canonical(d, out), 1);
    return out;
}

} // namespace qcg
