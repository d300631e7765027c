#include "wkl/ring.hpp"

#include <algorithm>
#include <sstream>

namespace wkl {

int64_t ipow64(int64_t base, int64_t exp) {
    int64_t r = 1;
    while (exp-- > 0) {
        if (r > (int64_t(1) << 62) / std::max<int64_t>(base, 1))
            throw std::overflow_error("integer power overflow");
        r *= base;
    }
    return r;
}

RingSpec RingSpec::make(RingKind kind, int64_t p, int f, int64_t e, int n) {
    if (f > 1 || kind == RingKind::EqualChar)
        return make(kind, p, f, e, n, find_irreducible(p, f));
    return make(kind, p, f, e, n, std::vector<int64_t>{0, 1});
}

RingSpec RingSpec::make(RingKind kind, int64_t p, int f, int64_t e, int n,
                        std::vector<int64_t> residue_poly) {
    if (!is_prime(p)) throw std::invalid_argument("p must be prime");
    if (f < 1) throw std::invalid_argument("f must be >= 1");
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    RingSpec s;
    switch (kind) {
        case RingKind::EqualChar:
            e = 0;  // pi-adic valuation of p is infinite; stored as 0
            break;
        case RingKind::Unramified:
            if (e != 1) throw std::invalid_argument("unramified kind requires e = 1");
            break;
        case RingKind::Eisenstein:
            if (f != 1) throw std::invalid_argument("eisenstein kind requires f = 1");
            if (e < 2) throw std::invalid_argument("eisenstein kind requires e >= 2");
            break;
    }
    s.kind_ = kind;
    s.p_ = p;
    s.f_ = f;
    s.e_ = e;
    s.n_ = n;
    s.fq_ = std::make_shared<Fq>(p, f, std::move(residue_poly));
    s.q_ = s.fq_->q();
    s.size_ = ipow64(s.q_, n);
    s.unit_count_ = ipow64(s.q_, n - 1) * (s.q_ - 1);
    switch (kind) {
        case RingKind::EqualChar: s.radices_.assign(n, s.q_); break;
        case RingKind::Unramified: s.radices_.assign(f, ipow64(p, n)); break;
        case RingKind::Eisenstein: s.radices_.assign(n, p); break;
    }
    return s;
}

int64_t RingSpec::ideal_size(int s) const {
    if (s < 0 || s > n_) throw std::invalid_argument("ideal level out of range");
    return ipow64(q_, n_ - s);
}

RingElt RingSpec::zero() const { return RingElt{std::vector<int64_t>(radices_.size(), 0)}; }

RingElt RingSpec::one() const {
    RingElt z = zero();
    z.d[0] = 1;
    return z;
}

RingElt RingSpec::pi() const {
    RingElt z = zero();
    if (kind_ == RingKind::Unramified) {
        if (n_ > 1) z.d[0] = p_;
    } else {
        if (n_ > 1) z.d[1] = 1;
    }
    return z;
}

RingElt RingSpec::pi_pow(int s) const {
    if (s >= n_) return zero();
    RingElt z = zero();
    if (kind_ == RingKind::Unramified)
        z.d[0] = ipow64(p_, s);
    else
        z.d[s] = 1;
    return z;
}

RingElt RingSpec::from_int(int64_t m) const {
    int64_t mod = (kind_ == RingKind::EqualChar) ? p_
                 : (kind_ == RingKind::Unramified) ? ipow64(p_, n_)
                 : ipow64(p_, (n_ + e_ - 1) / e_);
    int64_t r = ((m % mod) + mod) % mod;
    if (kind_ == RingKind::EqualChar) {
        RingElt z = zero();
        z.d[0] = r;  // prime-field code
        return z;
    }
    if (kind_ == RingKind::Unramified) {
        RingElt z = zero();
        z.d[0] = r;
        return z;
    }
    // eisenstein: expand r in base p along the columns x^0, x^e, x^2e, ...
    RingElt z = zero();
    for (int i = 0; i * e_ < n_ && r; ++i) {
        z.d[i * e_] = r % p_;
        r /= p_;
    }
    return z;
}

RingElt RingSpec::add(const RingElt& x, const RingElt& y) const {
    RingElt z = zero();
    switch (kind_) {
        case RingKind::EqualChar:
            for (int i = 0; i < n_; ++i) z.d[i] = fq_->add(x.d[i], y.d[i]);
            break;
        case RingKind::Unramified: {
            int64_t M = radices_[0];
            for (int j = 0; j < f_; ++j) z.d[j] = (x.d[j] + y.d[j]) % M;
            break;
        }
        case RingKind::Eisenstein: {
            std::vector<int64_t> t(n_ + e_, 0);
            for (int i = 0; i < n_; ++i) t[i] = x.d[i] + y.d[i];
            for (int i = 0; i < n_; ++i) {
                int64_t c = t[i] / p_;
                t[i] -= c * p_;
                t[i + e_] += c;  // p * x^i = x^(i+e)
            }
            for (int i = 0; i < n_; ++i) z.d[i] = t[i];
            break;
        }
    }
    return z;
}

RingElt RingSpec::neg(const RingElt& x) const {
    RingElt z = zero();
    switch (kind_) {
        case RingKind::EqualChar:
            for (int i = 0; i < n_; ++i) z.d[i] = fq_->neg(x.d[i]);
            break;
        case RingKind::Unramified: {
            int64_t M = radices_[0];
            for (int j = 0; j < f_; ++j) z.d[j] = (M - x.d[j]) % M;
            break;
        }
        case RingKind::Eisenstein: {
            std::vector<int64_t> t(n_ + e_, 0);
            for (int i = 0; i < n_; ++i) t[i] = -x.d[i];
            for (int i = 0; i < n_; ++i) {
                int64_t c = t[i] >= 0 ? t[i] / p_ : -((-t[i] + p_ - 1) / p_);
                t[i] -= c * p_;
                t[i + e_] += c;
            }
            for (int i = 0; i < n_; ++i) z.d[i] = t[i];
            break;
        }
    }
    return z;
}

RingElt RingSpec::sub(const RingElt& x, const RingElt& y) const { return add(x, neg(y)); }

RingElt RingSpec::mul(const RingElt& x, const RingElt& y) const {
    RingElt z = zero();
    switch (kind_) {
        case RingKind::EqualChar:
            for (int i = 0; i < n_; ++i) {
                if (!x.d[i]) continue;
                for (int j = 0; j + i < n_; ++j)
                    if (y.d[j]) z.d[i + j] = fq_->add(z.d[i + j], fq_->mul(x.d[i], y.d[j]));
            }
            break;
        case RingKind::Unramified: {
            int64_t M = radices_[0];
            const auto& m = fq_->modpoly();
            std::vector<int64_t> res(2 * f_ - 1, 0);
            for (int i = 0; i < f_; ++i)
                if (x.d[i])
                    for (int j = 0; j < f_; ++j)
                        res[i + j] = (res[i + j] + x.d[i] * y.d[j]) % M;
            for (int i = static_cast<int>(res.size()) - 1; i >= f_; --i) {
                int64_t c = res[i];
                if (c)
                    for (int j = 0; j <= f_; ++j)
                        res[i - f_ + j] = ((res[i - f_ + j] - c * m[j]) % M + M) % M;
            }
            for (int j = 0; j < f_; ++j) z.d[j] = res[j];
            break;
        }
        case RingKind::Eisenstein: {
            std::vector<int64_t> t(2 * n_ + e_, 0);
            for (int i = 0; i < n_; ++i)
                if (x.d[i])
                    for (int j = 0; j + i < n_; ++j) t[i + j] += x.d[i] * y.d[j];
            for (int i = 0; i < n_; ++i) {
                int64_t c = t[i] / p_;
                t[i] -= c * p_;
                t[i + e_] += c;
            }
            for (int i = 0; i < n_; ++i) z.d[i] = t[i];
            break;
        }
    }
    return z;
}

RingElt RingSpec::pow(const RingElt& x, int64_t e) const {
    RingElt r = one(), b = x;
    while (e > 0) {
        if (e & 1) r = mul(r, b);
        b = mul(b, b);
        e >>= 1;
    }
    return r;
}

RingElt RingSpec::inv(const RingElt& x) const {
    if (!is_unit(x)) throw std::domain_error("inverse of a non-unit");
    // Newton lift of the residue-field inverse: y <- y(2 - xy)
    RingElt y = lift_residue(fq_->inv(residue(x)));
    RingElt two = from_int(2);
    for (int prec = 1; prec < n_; prec *= 2)
        y = mul(y, sub(two, mul(x, y)));
    return y;
}

int RingSpec::valuation(const RingElt& x) const {
    if (kind_ == RingKind::Unramified) {
        int v = n_;
        for (int j = 0; j < f_; ++j) {
            if (!x.d[j]) continue;
            int64_t a = x.d[j];
            int w = 0;
            while (a % p_ == 0) { a /= p_; ++w; }
            v = std::min(v, w);
        }
        return v;
    }
    for (int i = 0; i < n_; ++i)
        if (x.d[i]) return i;
    return n_;
}

bool RingSpec::is_zero(const RingElt& x) const {
    return std::all_of(x.d.begin(), x.d.end(), [](int64_t v) { return v == 0; });
}

RingElt RingSpec::div_by_pi_pow(const RingElt& x, int s) const {
    if (valuation(x) < s) throw std::domain_error("element not divisible by pi^s");
    RingElt z = zero();
    if (kind_ == RingKind::Unramified) {
        int64_t ps = ipow64(p_, s);
        for (int j = 0; j < f_; ++j) z.d[j] = x.d[j] / ps;
        return z;
    }
    for (int i = s; i < n_; ++i) z.d[i - s] = x.d[i];
    return z;
}

RingElt RingSpec::reduce_mod_pi_pow(const RingElt& x, int s) const {
    RingElt z = zero();
    if (s >= n_) return x;
    if (kind_ == RingKind::Unramified) {
        int64_t ps = ipow64(p_, s);
        for (int j = 0; j < f_; ++j) z.d[j] = x.d[j] % ps;
        return z;
    }
    for (int i = 0; i < s; ++i) z.d[i] = x.d[i];
    return z;
}

int64_t RingSpec::residue(const RingElt& x) const {
    switch (kind_) {
        case RingKind::EqualChar: return x.d[0];
        case RingKind::Unramified: {
            std::vector<int64_t> v(f_);
            for (int j = 0; j < f_; ++j) v[j] = x.d[j] % p_;
            return fq_->from_digits(v);
        }
        case RingKind::Eisenstein: return x.d[0];
    }
    return 0;
}

RingElt RingSpec::lift_residue(int64_t code) const {
    RingElt z = zero();
    if (kind_ == RingKind::Unramified) {
        auto v = fq_->digits(code);
        for (int j = 0; j < f_; ++j) z.d[j] = v[j];
        return z;
    }
    z.d[0] = code;
    return z;
}

int64_t RingSpec::index_of(const RingElt& x) const {
    int64_t idx = 0;
    for (int i = static_cast<int>(x.d.size()) - 1; i >= 0; --i)
        idx = idx * radices_[i] + x.d[i];
    return idx;
}

RingElt RingSpec::element_at(int64_t idx) const {
    RingElt z = zero();
    for (size_t i = 0; i < radices_.size(); ++i) {
        z.d[i] = idx % radices_[i];
        idx /= radices_[i];
    }
    return z;
}

std::vector<RingElt> RingSpec::all_elements(int64_t budget) const {
    if (size_ > budget) throw BudgetExceeded("ring enumeration exceeds budget");
    std::vector<RingElt> v;
    v.reserve(size_);
    for (int64_t i = 0; i < size_; ++i) v.push_back(element_at(i));
    return v;
}

std::vector<RingElt> RingSpec::units(int64_t budget) const {
    if (size_ > budget) throw BudgetExceeded("unit enumeration exceeds budget");
    std::vector<RingElt> v;
    v.reserve(unit_count_);
    for (int64_t i = 0; i < size_; ++i) {
        RingElt x = element_at(i);
        if (is_unit(x)) v.push_back(std::move(x));
    }
    return v;
}

std::vector<RingElt> RingSpec::ideal_elements(int s, int64_t budget) const {
    if (s < 0 || s > n_) throw std::invalid_argument("ideal level out of range");
    if (size_ > budget) throw BudgetExceeded("ideal enumeration exceeds budget");
    std::vector<RingElt> v;
    v.reserve(ideal_size(s));
    for (int64_t i = 0; i < size_; ++i) {
        RingElt x = element_at(i);
        if (valuation(x) >= s) v.push_back(std::move(x));
    }
    return v;
}

std::vector<RingElt> RingSpec::additive_generators(int s) const {
    std::vector<RingElt> gens;
    switch (kind_) {
        case RingKind::EqualChar:
            for (int i = s; i < n_; ++i)
                for (int j = 0; j < f_; ++j) {
                    RingElt z = zero();
                    z.d[i] = ipow64(p_, j);  // u^j t^i
                    gens.push_back(std::move(z));
                }
            break;
        case RingKind::Unramified:
            for (int j = 0; j < f_; ++j) {
                RingElt z = zero();
                z.d[j] = ipow64(p_, s);  // p^s u^j
                gens.push_back(std::move(z));
            }
            break;
        case RingKind::Eisenstein:
            // one generator per x-column entered at level s
            for (int i = s; i < std::min<int64_t>(s + e_, n_); ++i) {
                RingElt z = zero();
                z.d[i] = 1;
                gens.push_back(std::move(z));
            }
            break;
    }
    return gens;
}

int64_t RingSpec::additive_exponent() const {
    if (kind_ == RingKind::EqualChar) return p_;
    if (kind_ == RingKind::Unramified) return ipow64(p_, n_);
    return ipow64(p_, (n_ + e_ - 1) / e_);
}

std::string RingSpec::describe() const {
    std::ostringstream os;
    switch (kind_) {
        case RingKind::EqualChar: os << "equal-char"; break;
        case RingKind::Unramified: os << "unramified"; break;
        case RingKind::Eisenstein: os << "eisenstein"; break;
    }
    os << ":p=" << p_ << ",f=" << f_ << ",e=" << (equal_char() ? 0 : e_) << ",n=" << n_;
    if (f_ > 1) {
        os << ",poly=";
        const auto& m = fq_->modpoly();
        for (size_t i = 0; i < m.size(); ++i) os << (i ? "." : "") << m[i];
    }
    return os.str();
}

RingSpec RingSpec::parse(const std::string& text) {
    auto colon = text.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("bad ring spec: " + text);
    std::string kind_s = text.substr(0, colon);
    RingKind kind;
    if (kind_s == "equal-char") kind = RingKind::EqualChar;
    else if (kind_s == "unramified") kind = RingKind::Unramified;
    else if (kind_s == "eisenstein") kind = RingKind::Eisenstein;
    else throw std::invalid_argument("unknown ring kind: " + kind_s);
    int64_t p = 0, e = 1;
    int f = 1, n = 0;
    std::vector<int64_t> poly;
    std::string rest = text.substr(colon + 1);
    std::istringstream is(rest);
    std::string item;
    while (std::getline(is, item, ',')) {
        auto eq = item.find('=');
        if (eq == std::string::npos) throw std::invalid_argument("bad ring spec field: " + item);
        std::string key = item.substr(0, eq), val = item.substr(eq + 1);
        if (key == "p") p = std::stoll(val);
        else if (key == "f") f = std::stoi(val);
        else if (key == "e") e = std::stoll(val);
        else if (key == "n") n = std::stoi(val);
        else if (key == "poly") {
            std::istringstream ps(val);
            std::string c;
            while (std::getline(ps, c, '.')) poly.push_back(std::stoll(c));
        } else throw std::invalid_argument("unknown ring spec field: " + key);
    }
    if (kind == RingKind::Unramified) e = 1;
    if (!poly.empty()) return make(kind, p, f, e, n, std::move(poly));
    return make(kind, p, f, e, n);
}

} // namespace wkl
