#include "wkl/cyclo.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace wkl {

namespace {

int64_t smallest_prime_factor(int64_t m) {
    for (int64_t d = 2; d * d <= m; ++d)
        if (m % d == 0) return d;
    return m;
}

} // namespace

CycloVec::CycloVec(int64_t modulus) : M_(modulus), c_(modulus, 0) {
    if (modulus < 1) throw std::invalid_argument("modulus must be positive");
    p_ = smallest_prime_factor(modulus);
    int64_t m = modulus;
    while (m > 1) {
        if (m % p_ != 0) throw std::invalid_argument("modulus must be a prime power");
        m /= p_;
    }
}

CycloVec CycloVec::root(int64_t modulus, int64_t j) {
    CycloVec v(modulus);
    j %= modulus;
    if (j < 0) j += modulus;
    v.c_[j] = 1;
    return v;
}

CycloVec CycloVec::constant(int64_t modulus, int64_t a) {
    CycloVec v(modulus);
    v.c_[0] = a;
    return v;
}

CycloVec& CycloVec::operator+=(const CycloVec& o) {
    if (M_ != o.M_) throw std::invalid_argument("modulus mismatch");
    for (int64_t i = 0; i < M_; ++i) c_[i] += o.c_[i];
    return *this;
}

CycloVec& CycloVec::operator-=(const CycloVec& o) {
    if (M_ != o.M_) throw std::invalid_argument("modulus mismatch");
    for (int64_t i = 0; i < M_; ++i) c_[i] -= o.c_[i];
    return *this;
}

CycloVec CycloVec::operator+(const CycloVec& o) const { CycloVec r = *this; r += o; return r; }
CycloVec CycloVec::operator-(const CycloVec& o) const { CycloVec r = *this; r -= o; return r; }

CycloVec CycloVec::operator*(const CycloVec& o) const {
    if (M_ != o.M_) throw std::invalid_argument("modulus mismatch");
    CycloVec r(M_);
    for (int64_t i = 0; i < M_; ++i) {
        if (!c_[i]) continue;
        for (int64_t j = 0; j < M_; ++j) {
            if (!o.c_[j]) continue;
            int64_t k = i + j;
            if (k >= M_) k -= M_;
            r.c_[k] += c_[i] * o.c_[j];
        }
    }
    return r;
}

CycloVec CycloVec::scaled(int64_t a) const {
    CycloVec r = *this;
    for (auto& x : r.c_) x *= a;
    return r;
}

CycloVec CycloVec::rotated(int64_t j) const {
    j %= M_;
    if (j < 0) j += M_;
    CycloVec r(M_);
    for (int64_t i = 0; i < M_; ++i) {
        int64_t k = i + j;
        if (k >= M_) k -= M_;
        r.c_[k] = c_[i];
    }
    return r;
}

void CycloVec::add_rotated(const CycloVec& o, int64_t j) {
    if (M_ != o.M_) throw std::invalid_argument("modulus mismatch");
    j %= M_;
    if (j < 0) j += M_;
    for (int64_t i = 0; i < M_; ++i) {
        int64_t k = i + j;
        if (k >= M_) k -= M_;
        c_[k] += o.c_[i];
    }
}

CycloVec CycloVec::conj() const {
    CycloVec r(M_);
    for (int64_t i = 0; i < M_; ++i) r.c_[(M_ - i) % M_] = c_[i];
    return r;
}

std::vector<int64_t> CycloVec::canonical() const {
    // Phi_{p^m}(z) = sum_{i<p} z^(i p^(m-1)): fold exponents >= phi(M).
    const int64_t mm = M_ / p_;
    const int64_t phi = (p_ - 1) * mm;
    std::vector<int64_t> out(c_.begin(), c_.begin() + phi);
    for (int64_t j = phi; j < M_; ++j) {
        int64_t a = c_[j];
        if (!a) continue;
        int64_t r = j - phi;
        for (int64_t i = 0; i < p_ - 1; ++i) out[r + i * mm] -= a;
    }
    return out;
}

CycloVec CycloVec::canonicalized() const {
    CycloVec r(M_);
    auto can = canonical();
    for (size_t i = 0; i < can.size(); ++i) r.c_[i] = can[i];
    return r;
}

bool CycloVec::is_zero() const {
    for (int64_t x : canonical())
        if (x) return false;
    return true;
}

bool CycloVec::equals(const CycloVec& o) const { return (*this - o).is_zero(); }

std::optional<int64_t> CycloVec::rational_value() const {
    auto can = canonical();
    for (size_t i = 1; i < can.size(); ++i)
        if (can[i]) return std::nullopt;
    return can[0];
}

CycloVec CycloVec::scaled_pow_exact(int64_t base, int64_t exp) const {
    if (exp >= 0) {
        int64_t s = 1;
        while (exp-- > 0) s *= base;
        return scaled(s);
    }
    int64_t s = 1;
    while (exp++ < 0) s *= base;
    CycloVec r = canonicalized();
    for (auto& x : r.c_) {
        if (x % s != 0) throw std::domain_error("inexact division of a cyclotomic value");
        x /= s;
    }
    return r;
}

double CycloVec::abs_value() const {
    double re = 0.0, im = 0.0;
    for (int64_t j = 0; j < M_; ++j) {
        if (!c_[j]) continue;
        double th = 2.0 * std::numbers::pi * double(j) / double(M_);
        re += double(c_[j]) * std::cos(th);
        im += double(c_[j]) * std::sin(th);
    }
    return std::sqrt(re * re + im * im);
}

CycloVec CycloVec::abs_square() const { return *this * conj(); }

CycloVec CycloVec::embedded(int64_t M2) const {
    if (M2 == M_) return *this;
    if (M2 % M_ == 0) {
        CycloVec r(M2);
        int64_t k = M2 / M_;
        for (int64_t j = 0; j < M_; ++j)
            if (c_[j]) r.c_[(j * k) % M2] += c_[j];
        return r;
    }
    auto v = rational_value();
    if (!v) throw std::invalid_argument("cannot embed: moduli incompatible and value irrational");
    return constant(M2, *v);
}

CycloVec root_of_unity_in(int64_t order, int64_t j, int64_t modulus) {
    j %= order;
    if (j < 0) j += order;
    if (modulus % order == 0)
        return CycloVec::root(modulus, j * (modulus / order));
    if ((2 * modulus) % order == 0 && modulus % 2 == 1) {
        // zeta_{2M} = -zeta_M^((M+1)/2)
        int64_t jj = j * (2 * modulus / order) % (2 * modulus);
        CycloVec v = CycloVec::root(modulus, jj * ((modulus + 1) / 2) % modulus);
        return (jj % 2 == 0) ? v : v.scaled(-1);
    }
    throw std::invalid_argument("root of unity does not fit the requested cyclotomic modulus");
}

AdditiveCharacter::AdditiveCharacter(const RingSpec& spec, uint64_t seed)
    : spec_(spec), M_(spec.additive_exponent()) {
    auto us = spec.units();
    twist_ = us[seed % us.size()];
    lam_.resize(spec.size());
    for (int64_t i = 0; i < spec.size(); ++i)
        lam_[i] = base_functional(spec.mul(twist_, spec.element_at(i)));
    // nondegeneracy: nontrivial on pi^(n-1) R
    bool nondeg = false;
    for (const auto& y : spec.ideal_elements(spec.n() - 1))
        if (exponent(y) % M_ != 0) { nondeg = true; break; }
    if (!nondeg) throw std::logic_error("constructed additive character is degenerate");
}

int64_t AdditiveCharacter::base_functional(const RingElt& x) const {
    const auto& s = spec_;
    switch (s.kind()) {
        case RingKind::EqualChar:
            // trace of the top t-digit
            return s.residue_field().trace(x.d[s.n() - 1]);
        case RingKind::Unramified:
            // u^0-coefficient, an element of Z/p^n
            return x.d[0] % M_;
        case RingKind::Eisenstein: {
            // x-column j0 = (n-1) mod e, scaled into Z/M
            int64_t e = s.e(), p = s.p();
            int n = s.n();
            int64_t j0 = (n - 1) % e;
            int64_t col = 0, pk = 1;
            for (int64_t i = j0; i < n; i += e, pk *= p) col += x.d[i] * pk;
            int64_t prec = (n - j0 + e - 1) / e;      // ceil((n-j0)/e)
            int64_t shift = (n + e - 1) / e - prec;
            return col % M_ * ipow64(p, shift) % M_;
        }
    }
    return 0;
}

} // namespace wkl
