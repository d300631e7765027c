#include "wkl/fqpoly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace wkl {

namespace poly {

Poly normalized(Poly a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
}

int deg(const Poly& a) { return static_cast<int>(a.size()) - 1; }

bool is_monic(const Poly& a) { return !a.empty() && a.back() == 1; }

Poly add(const Fq& F, const Poly& a, const Poly& b) {
    Poly r(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < r.size(); ++i)
        r[i] = F.add(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0);
    return normalized(std::move(r));
}

Poly neg(const Fq& F, const Poly& a) {
    Poly r = a;
    for (auto& c : r) c = F.neg(c);
    return r;
}

Poly sub(const Fq& F, const Poly& a, const Poly& b) { return add(F, a, neg(F, b)); }

Poly mul(const Fq& F, const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i])
            for (size_t j = 0; j < b.size(); ++j)
                if (b[j]) r[i + j] = F.add(r[i + j], F.mul(a[i], b[j]));
    return normalized(std::move(r));
}

std::pair<Poly, Poly> divmod(const Fq& F, const Poly& a, const Poly& b) {
    if (b.empty()) throw std::domain_error("polynomial division by zero");
    Poly r = a;
    Poly q(a.size() > b.size() - 1 ? a.size() - b.size() + 1 : 0, 0);
    int64_t lead_inv = F.inv(b.back());
    while (r.size() >= b.size()) {
        if (r.back() == 0) { r.pop_back(); continue; }
        int64_t c = F.mul(r.back(), lead_inv);
        size_t off = r.size() - b.size();
        q[off] = c;
        for (size_t j = 0; j < b.size(); ++j)
            r[off + j] = F.sub(r[off + j], F.mul(c, b[j]));
        r.pop_back();
    }
    return {normalized(std::move(q)), normalized(std::move(r))};
}

Poly gcd(const Fq& F, Poly a, Poly b) {
    a = normalized(std::move(a));
    b = normalized(std::move(b));
    while (!b.empty()) {
        Poly r = divmod(F, a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty() && a.back() != 1) {
        int64_t inv = F.inv(a.back());
        for (auto& c : a) c = F.mul(c, inv);
    }
    return a;
}

Poly pow(const Fq& F, Poly base, int64_t e) {
    Poly r{1};
    while (e > 0) {
        if (e & 1) r = mul(F, r, base);
        base = mul(F, base, base);
        e >>= 1;
    }
    return r;
}

std::vector<Poly> monics(const Fq& F, int d) {
    std::vector<Poly> out;
    if (d < 0) return out;
    int64_t count = 1;
    for (int i = 0; i < d; ++i) count *= F.q();
    out.reserve(count);
    for (int64_t code = 0; code < count; ++code) {
        Poly f(d + 1, 0);
        int64_t c = code;
        for (int i = 0; i < d; ++i) { f[i] = c % F.q(); c /= F.q(); }
        f[d] = 1;
        out.push_back(std::move(f));
    }
    return out;
}

bool is_irreducible(const Fq& F, const Poly& a) {
    int d = deg(a);
    if (d <= 0) return false;
    if (d == 1) return true;
    for (int e = 1; e <= d / 2; ++e)
        for (const auto& g : monics(F, e))
            if (divmod(F, a, g).second.empty()) return false;
    return true;
}

std::vector<Poly> irreducibles(const Fq& F, int d) {
    std::vector<Poly> out;
    for (const auto& f : monics(F, d))
        if (is_irreducible(F, f)) out.push_back(f);
    return out;
}

std::string to_string(const Poly& a) {
    if (a.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = deg(a); i >= 0; --i) {
        if (!a[i]) continue;
        if (!first) os << "+";
        first = false;
        if (i == 0 || a[i] != 1) os << a[i];
        if (i >= 1) os << "T";
        if (i >= 2) os << "^" << i;
    }
    return os.str();
}

Poly parse(const std::string& text, const Fq& F) {
    Poly r;
    std::string term;
    auto flush = [&](const std::string& t) {
        if (t.empty()) return;
        int64_t coeff = 1;
        int expn = 0;
        size_t pos = 0;
        bool has_coeff = false;
        int64_t c = 0;
        while (pos < t.size() && isdigit(static_cast<unsigned char>(t[pos]))) {
            c = c * 10 + (t[pos] - '0');
            has_coeff = true;
            ++pos;
        }
        if (has_coeff) coeff = c;
        if (pos < t.size()) {
            if (t[pos] != 'T' && t[pos] != 't') throw std::invalid_argument("bad polynomial: " + t);
            ++pos;
            expn = 1;
            if (pos < t.size() && t[pos] == '^') {
                ++pos;
                expn = std::stoi(t.substr(pos));
            }
        }
        if (static_cast<int>(r.size()) <= expn) r.resize(expn + 1, 0);
        r[expn] = F.add(r[expn], static_cast<int64_t>(((coeff % F.p()) + F.p()) % F.p()));
    };
    for (char ch : text) {
        if (ch == ' ') continue;
        if (ch == '+') { flush(term); term.clear(); }
        else term.push_back(ch);
    }
    flush(term);
    return normalized(std::move(r));
}

} // namespace poly

PolyQuot::PolyQuot(std::shared_ptr<const Fq> field, Poly pi, int n)
    : F_(std::move(field)), pi_(poly::normalized(std::move(pi))), n_(n) {
    if (n < 1) throw std::invalid_argument("precision must be >= 1");
    if (!poly::is_monic(pi_) || !poly::is_irreducible(*F_, pi_))
        throw std::invalid_argument("modulus must be a monic irreducible polynomial");
    pi_deg_ = poly::deg(pi_);
    N_ = n * pi_deg_ - 1;
    abs_pi_ = ipow64(F_->q(), pi_deg_);
    size_ = ipow64(F_->q(), n * pi_deg_);
    unit_count_ = ipow64(abs_pi_, n - 1) * (abs_pi_ - 1);
    modulus_ = poly::pow(*F_, pi_, n);
}

Poly PolyQuot::reduce(const Poly& a) const { return poly::divmod(*F_, a, modulus_).second; }

bool PolyQuot::is_unit(const Poly& a) const {
    Poly g = poly::gcd(*F_, reduce(a), pi_);
    return poly::deg(g) == 0;
}

Poly PolyQuot::mul(const Poly& a, const Poly& b) const { return reduce(poly::mul(*F_, a, b)); }

Poly PolyQuot::pow(const Poly& a, int64_t e) const {
    Poly r{1}, base = reduce(a);
    while (e > 0) {
        if (e & 1) r = mul(r, base);
        base = mul(base, base);
        e >>= 1;
    }
    return r;
}

Poly PolyQuot::inv(const Poly& a) const {
    if (!is_unit(a)) throw std::domain_error("inverse of a non-unit polynomial class");
    return pow(a, unit_count_ - 1);
}

int64_t PolyQuot::index_of(const Poly& a) const {
    int64_t idx = 0;
    for (int i = N_; i >= 0; --i)
        idx = idx * F_->q() + (i < static_cast<int>(a.size()) ? a[i] : 0);
    return idx;
}

Poly PolyQuot::element_at(int64_t idx) const {
    Poly f(N_ + 1, 0);
    for (int i = 0; i <= N_; ++i) { f[i] = idx % F_->q(); idx /= F_->q(); }
    return poly::normalized(std::move(f));
}

std::vector<Poly> PolyQuot::elements() const {
    std::vector<Poly> out;
    out.reserve(size_);
    for (int64_t i = 0; i < size_; ++i) out.push_back(element_at(i));
    return out;
}

std::vector<Poly> PolyQuot::units() const {
    std::vector<Poly> out;
    out.reserve(unit_count_);
    for (int64_t i = 0; i < size_; ++i) {
        Poly f = element_at(i);
        if (is_unit(f)) out.push_back(std::move(f));
    }
    return out;
}

int64_t PolyQuot::top_coeff(const Poly& a) const {
    return static_cast<int>(a.size()) > N_ ? a[N_] : 0;
}

int64_t PolyQuot::coprime_monic_count(int d) const {
    if (d < 0) return 0;
    int64_t total = ipow64(F_->q(), d);
    if (d >= pi_deg_) total -= ipow64(F_->q(), d - pi_deg_);
    return total;
}

UnitGroupTable::UnitGroupTable(const PolyQuot& R) : R_(R) {
    order_ = R.unit_count();
    auto us = R.units();
    dlog_.resize(R.size());
    // H maps covered element index -> exponent vector over current gens
    std::vector<int> covered(R.size(), 0);
    std::vector<int64_t> members{R.index_of(Poly{1})};
    dlog_[members[0]] = {};
    covered[members[0]] = 1;
    auto order_in_quotient = [&](const Poly& g) {
        int64_t m = 1;
        Poly x = g;
        while (!covered[R.index_of(x)]) { x = R.mul(x, g); ++m; }
        return m;
    };
    while (static_cast<int64_t>(members.size()) < order_) {
        // element whose image in G/H has maximal order
        Poly best;
        int64_t best_m = 0;
        for (const auto& g : us) {
            if (covered[R.index_of(g)]) continue;
            int64_t m = order_in_quotient(g);
            if (m > best_m) { best_m = m; best = g; }
        }
        if (best_m <= 1) throw std::logic_error("unit group presentation failed");
        // adjust so the new generator has true order best_m: g^m lies in H,
        // divide out an m-th root from H
        Poly g = best;
        Poly x = g;
        for (int64_t i = 1; i < best_m; ++i) x = R.mul(x, g);
        const auto& v = dlog_[R.index_of(x)];
        Poly adjusted = g;
        for (size_t t = 0; t < gens_.size(); ++t) {
            int64_t m = best_m, o = ords_[t], vi = v[t];
            int64_t d = std::gcd(m, o);
            if (vi % d != 0) throw std::logic_error("unit group presentation failed (divisibility)");
            int64_t oo = o / d, mm = (m / d) % oo, vv = (vi / d) % oo;
            // solve mm * w = vv mod oo
            int64_t w = 0;
            for (int64_t cand = 0; cand < oo; ++cand)
                if ((mm * cand) % oo == vv % oo) { w = cand; break; }
            adjusted = R.mul(adjusted, R.pow(gens_[t], (o - w) % o));
        }
        if (!(R.pow(adjusted, best_m) == Poly{1}))
            throw std::logic_error("unit group presentation failed (order)");
        gens_.push_back(adjusted);
        ords_.push_back(best_m);
        // extend H
        std::vector<int64_t> prev = members;
        for (int64_t idx : prev) {
            Poly base = R.element_at(idx);
            Poly cur = base;
            for (int64_t j = 1; j < best_m; ++j) {
                cur = R.mul(cur, adjusted);
                int64_t ci = R.index_of(cur);
                dlog_[ci] = dlog_[idx];
                dlog_[ci].push_back(j);
                covered[ci] = 1;
                members.push_back(ci);
            }
            dlog_[idx].push_back(0);
        }
    }
    for (int64_t o : ords_) exponent_ = std::lcm(exponent_, o);
    if (gens_.empty()) exponent_ = 1;
}

bool UnitGroupTable::is_unit(const Poly& a) const { return R_.is_unit(a); }

const std::vector<int64_t>& UnitGroupTable::dlog(const Poly& a) const {
    Poly r = R_.reduce(a);
    if (!R_.is_unit(r)) throw std::domain_error("dlog of a non-unit");
    return dlog_[R_.index_of(r)];
}

Poly UnitGroupTable::from_dlog(const std::vector<int64_t>& v) const {
    Poly r{1};
    for (size_t i = 0; i < gens_.size(); ++i)
        r = R_.mul(r, R_.pow(gens_[i], ((v[i] % ords_[i]) + ords_[i]) % ords_[i]));
    return r;
}

} // namespace wkl
