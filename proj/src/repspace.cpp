#include "qcg/repspace.hpp"

#include "qcg/legop.hpp"

namespace qcg {

struct RepSpaceData {
    const Session* s = nullptr;
    int dim = 0;
    int factors = 0;
    std::vector<Weight> weights;
    std::vector<LegOp> e, f;
};

const Session& RepSpace::session() const { return *d_->s; }
int RepSpace::rank() const { return d_->s->rank(); }
int RepSpace::dim() const { return d_->dim; }
const Weight& RepSpace::weight(int idx) const { return d_->weights[idx]; }
const std::vector<Weight>& RepSpace::weights() const { return d_->weights; }
const LegOp& RepSpace::e(int i) const { return d_->e[static_cast<std::size_t>(i - 1)]; }
const LegOp& RepSpace::f(int i) const { return d_->f[static_cast<std::size_t>(i - 1)]; }
int RepSpace::fund_factors() const { return d_->factors; }

RepSpace RepSpace::fundamental(const Session& s) {
    int n = s.rank();
    auto d = std::make_shared<RepSpaceData>();
    d->s = &s;
    d->dim = n + 1;
    d->factors = 1;
    d->weights.resize(d->dim);
    for (int i = 1; i <= n + 1; ++i) {
        Weight& w = d->weights[static_cast<std::size_t>(i - 1)];
        w.h.assign(n, 0);
        w.zeta.assign(n, Rat(0));
        for (int j = 1; j <= n; ++j) {
            if (i == j)
                w.h[j - 1] += 1;
            if (i == j + 1)
                w.h[j - 1] -= 1;
            w.zeta[j - 1] = Rat(i <= j ? 1 : 0) - Rat(j, n + 1);
        }
        w.two_rho = n + 2 - 2 * i;
    }
    RepSpace handle(d);
    for (int i = 1; i <= n; ++i) {
        LegOp e(&s, {handle});
        LegOp f(&s, {handle});
        e.set(i - 1, i, Scalar::one(s));
        f.set(i, i - 1, Scalar::one(s));
        d->e.push_back(std::move(e));
        d->f.push_back(std::move(f));
    }
    return handle;
}

RepSpace RepSpace::trivial(const Session& s) {
    int n = s.rank();
    auto d = std::make_shared<RepSpaceData>();
    d->s = &s;
    d->dim = 1;
    d->factors = 0;
    Weight w;
    w.h.assign(n, 0);
    w.zeta.assign(n, Rat(0));
    d->weights.push_back(std::move(w));
    RepSpace handle(d);
    for (int i = 1; i <= n; ++i) {
        d->e.emplace_back(&s, std::vector<RepSpace>{handle});
        d->f.emplace_back(&s, std::vector<RepSpace>{handle});
    }
    return handle;
}

RepSpace RepSpace::tensor(const RepSpace& a, const RepSpace& b) {
    const Session& s = a.session();
    if (&s != &b.session())
        throw std::invalid_argument("tensor factors from different sessions");
    int n = s.rank();
    auto d = std::make_shared<RepSpaceData>();
    d->s = &s;
    d->dim = a.dim() * b.dim();
    d->factors = a.fund_factors() + b.fund_factors();
    d->weights.reserve(d->dim);
    for (int ia = 0; ia < a.dim(); ++ia)
        for (int ib = 0; ib < b.dim(); ++ib)
            d->weights.push_back(a.weight(ia) + b.weight(ib));

    RepSpace handle(d);

    // the coproduct sends e_i to e_i (x) q^{h_i} + 1 (x) e_i and f_i to
    // f_i (x) 1 + q^{-h_i} (x) f_i; matrices assembled on the flat basis
    auto flat = [&](int ia, int ib) { return ia * b.dim() + ib; };
    for (int i = 1; i <= n; ++i) {
        LegOp e(&s, {handle});
        LegOp f(&s, {handle});
        for (auto& [rc, v] : a.e(i).entries())
            for (int ib = 0; ib < b.dim(); ++ib) {
                Rat hb(b.weight(ib).h[i - 1]);
                e.add_to(flat(rc.first, ib), flat(rc.second, ib),
                         v * Scalar::qpow(s, hb));
            }
        for (auto& [rc, v] : b.e(i).entries())
            for (int ia = 0; ia < a.dim(); ++ia)
                e.add_to(flat(ia, rc.first), flat(ia, rc.second), v);
        for (auto& [rc, v] : a.f(i).entries())
            for (int ib = 0; ib < b.dim(); ++ib)
                f.add_to(flat(rc.first, ib), flat(rc.second, ib), v);
        for (auto& [rc, v] : b.f(i).entries())
            for (int ia = 0; ia < a.dim(); ++ia) {
                Rat ha(a.weight(ia).h[i - 1]);
                f.add_to(flat(ia, rc.first), flat(ia, rc.second),
                         v * Scalar::qpow(s, -ha));
            }
        d->e.push_back(std::move(e));
        d->f.push_back(std::move(f));
    }
    return handle;
}

RepSpace RepSpace::tensor_power(const RepSpace& a, int k) {
    if (k < 1)
        throw std::invalid_argument("tensor power needs k >= 1");
    RepSpace r = a;
    for (int j = 1; j < k; ++j)
        r = tensor(r, a);
    return r;
}

LegOp diag_q(const RepSpace& rep, const std::function<Rat(const Weight&)>& exponent) {
    LegOp r(&rep.session(), {rep});
    for (int i = 0; i < rep.dim(); ++i)
        r.set(i, i, Scalar::qpow(rep.session(), exponent(rep.weight(i))));
    return r;
}

LegOp diag_q2(const RepSpace& a, const RepSpace& b,
              const std::function<Rat(const Weight&, const Weight&)>& exponent) {
    LegOp r(&a.session(), {a, b});
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < b.dim(); ++j) {
            int idx = i * b.dim() + j;
            r.set(idx, idx, Scalar::qpow(a.session(), exponent(a.weight(i), b.weight(j))));
        }
    return r;
}

namespace {

Weight total_weight(const LegOp& op, int idx) {
    std::vector<int> multi = op.unflatten(idx);
    Weight w = op.legs()[0].weight(multi[0]);
    for (std::size_t p = 1; p < multi.size(); ++p)
        w = w + op.legs()[p].weight(multi[p]);
    return w;
}

} // namespace

bool is_zero_weight(const LegOp& op) {
    // commutes with q^h acting diagonally on the whole tensor product, so
    // every entry must connect states of equal total weight
    for (auto& [rc, v] : op.entries())
        if (!(total_weight(op, rc.first) == total_weight(op, rc.second)))
            return false;
    return true;
}

std::vector<Rat> root_coords(const Session& s, const Weight& hi, const Weight& lo) {
    int n = s.rank();
    // solve the tridiagonal Cartan system A c = h(hi) - h(lo)
    std::vector<Rat> d(n), diag(n), c(n);
    for (int i = 0; i < n; ++i)
        d[i] = Rat(hi.h[i] - lo.h[i]);
    diag[0] = Rat(2);
    for (int i = 1; i < n; ++i) {
        diag[i] = Rat(2) - Rat(1) / diag[i - 1];
        d[i] += d[i - 1] / diag[i - 1];
    }
    for (int i = n - 1; i >= 0; --i) {
        Rat rhs = d[i];
        if (i + 1 < n)
            rhs += c[i + 1];
        c[i] = rhs / diag[i];
    }
    return c;
}

Rat height_change(const LegOp& op, int row, int col) {
    Weight wr = total_weight(op, row);
    Weight wc = total_weight(op, col);
    std::vector<Rat> c = root_coords(op.session(), wr, wc);
    Rat h(0);
    for (auto& x : c)
        h += x;
    return h;
}

namespace {

bool triangular(const LegOp& op, int sign) {
    for (auto& [rc, v] : op.entries()) {
        if (rc.first == rc.second)
            continue;
        Weight wr = total_weight(op, rc.first);
        Weight wc = total_weight(op, rc.second);
        std::vector<Rat> c = root_coords(op.session(), wr, wc);
        bool some_nonzero = false;
        for (auto& x : c) {
            if (sign * x < 0)
                return false;
            if (x != 0)
                some_nonzero = true;
        }
        if (!some_nonzero)
            return false;
    }
    return true;
}

} // namespace

bool is_strictly_upper(const LegOp& op) { return triangular(op, +1); }
bool is_strictly_lower(const LegOp& op) { return triangular(op, -1); }

} // namespace qcg
