#include "wkl/fq.hpp"

#include <stdexcept>

namespace wkl {

bool is_prime(int64_t m) {
    if (m < 2) return false;
    for (int64_t d = 2; d * d <= m; ++d)
        if (m % d == 0) return false;
    return true;
}

namespace {

int64_t ipow(int64_t b, int e) {
    int64_t r = 1;
    while (e-- > 0) r *= b;
    return r;
}

// low-first coefficient vectors over F_p
std::vector<int64_t> poly_mul_mod(const std::vector<int64_t>& a, const std::vector<int64_t>& b,
                                  const std::vector<int64_t>& m, int64_t p) {
    const int f = static_cast<int>(m.size()) - 1;
    std::vector<int64_t> res(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i])
            for (size_t j = 0; j < b.size(); ++j)
                res[i + j] = (res[i + j] + a[i] * b[j]) % p;
    for (int i = static_cast<int>(res.size()) - 1; i >= f; --i) {
        int64_t c = res[i];
        if (c)
            for (int j = 0; j <= f; ++j)
                res[i - f + j] = ((res[i - f + j] - c * m[j]) % p + p) % p;
    }
    res.resize(f, 0);
    return res;
}

bool poly_divides(const std::vector<int64_t>& g, std::vector<int64_t> r, int64_t p) {
    while (r.size() >= g.size()) {
        if (r.back() == 0) { r.pop_back(); continue; }
        // g is monic here
        int64_t c = r.back();
        size_t off = r.size() - g.size();
        for (size_t j = 0; j < g.size(); ++j)
            r[off + j] = ((r[off + j] - c * g[j]) % p + p) % p;
        r.pop_back();
    }
    for (int64_t x : r)
        if (x) return false;
    return true;
}

} // namespace

bool poly_is_irreducible(const std::vector<int64_t>& m, int64_t p) {
    const int f = static_cast<int>(m.size()) - 1;
    if (f < 1) return false;
    if (f == 1) return true;
    std::vector<int64_t> g(2, 0);
    for (int d = 1; d <= f / 2; ++d) {
        g.assign(d + 1, 0);
        g[d] = 1;
        // iterate all monic degree-d polynomials
        bool more = true;
        while (more) {
            if (poly_divides(g, m, p)) return false;
            int i = 0;
            while (i < d && ++g[i] == p) g[i++] = 0;
            more = i < d;
        }
    }
    return true;
}

std::vector<int64_t> find_irreducible(int64_t p, int f) {
    if (f == 1) return {0, 1};
    std::vector<int64_t> m(f + 1, 0);
    m[f] = 1;
    while (true) {
        if (poly_is_irreducible(m, p)) return m;
        int i = 0;
        while (i < f && ++m[i] == p) m[i++] = 0;
        if (i == f) throw std::logic_error("no irreducible polynomial found");
    }
}

Fq::Fq(int64_t p, int f) : Fq(p, f, find_irreducible(p, f)) {}

Fq::Fq(int64_t p, int f, std::vector<int64_t> modpoly) : p_(p), f_(f), mod_(std::move(modpoly)) {
    if (!is_prime(p)) throw std::invalid_argument("residue characteristic must be prime");
    if (f < 1) throw std::invalid_argument("extension degree must be >= 1");
    if (static_cast<int>(mod_.size()) != f + 1 || mod_.back() != 1)
        throw std::invalid_argument("modulus polynomial must be monic of degree f");
    if (!poly_is_irreducible(mod_, p))
        throw std::invalid_argument("modulus polynomial is reducible");
    q_ = ipow(p, f);
    if (q_ > 4096) throw std::invalid_argument("residue field too large");
    build_tables();
}

std::vector<int64_t> Fq::digits(int64_t a) const {
    std::vector<int64_t> v(f_);
    for (int i = 0; i < f_; ++i) { v[i] = a % p_; a /= p_; }
    return v;
}

int64_t Fq::from_digits(const std::vector<int64_t>& v) const {
    int64_t a = 0;
    for (int i = f_ - 1; i >= 0; --i) a = a * p_ + v[i];
    return a;
}

void Fq::build_tables() {
    add_.resize(q_ * q_);
    mul_.resize(q_ * q_);
    neg_.resize(q_);
    inv_.assign(q_, 0);
    tr_.resize(q_);
    for (int64_t a = 0; a < q_; ++a) {
        auto va = digits(a);
        std::vector<int64_t> nv(f_);
        for (int i = 0; i < f_; ++i) nv[i] = (p_ - va[i]) % p_;
        neg_[a] = from_digits(nv);
        for (int64_t b = 0; b < q_; ++b) {
            auto vb = digits(b);
            std::vector<int64_t> sv(f_);
            for (int i = 0; i < f_; ++i) sv[i] = (va[i] + vb[i]) % p_;
            add_[a * q_ + b] = from_digits(sv);
            mul_[a * q_ + b] = from_digits(poly_mul_mod(va, vb, mod_, p_));
        }
    }
    for (int64_t a = 1; a < q_; ++a)
        for (int64_t b = 1; b < q_; ++b)
            if (mul_[a * q_ + b] == 1) { inv_[a] = b; break; }
    for (int64_t a = 0; a < q_; ++a) {
        int64_t t = 0, x = a;
        for (int i = 0; i < f_; ++i) {
            t = add(t, x);
            x = pow(x, p_);
        }
        tr_[a] = t; // lies in the prime field: code < p
    }
}

int64_t Fq::inv(int64_t a) const {
    if (a == 0) throw std::domain_error("inverse of zero in F_q");
    return inv_[a];
}

int64_t Fq::pow(int64_t a, int64_t e) const {
    int64_t r = 1;
    while (e > 0) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

} // namespace wkl
