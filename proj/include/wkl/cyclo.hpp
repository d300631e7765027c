#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "wkl/ring.hpp"

namespace wkl {

/// Exact integer combination of M-th roots of unity, M a prime power.
/// Coefficient j multiplies exp(2 pi i j / M). Two vectors represent the
/// same number iff their difference reduces to zero modulo the M-th
/// cyclotomic polynomial; canonical() performs that reduction onto the
/// basis 1, z, ..., z^(phi(M)-1).
class CycloVec {
public:
    explicit CycloVec(int64_t modulus);
    static CycloVec root(int64_t modulus, int64_t j);
    static CycloVec constant(int64_t modulus, int64_t a);

    int64_t modulus() const { return M_; }
    int64_t prime() const { return p_; }
    const std::vector<int64_t>& coeffs() const { return c_; }

    CycloVec& operator+=(const CycloVec& o);
    CycloVec& operator-=(const CycloVec& o);
    CycloVec operator+(const CycloVec& o) const;
    CycloVec operator-(const CycloVec& o) const;
    CycloVec operator*(const CycloVec& o) const;
    CycloVec scaled(int64_t a) const;
    /// Multiplication by the root zeta_M^j.
    CycloVec rotated(int64_t j) const;
    /// In-place *this += zeta_M^j * o.
    void add_rotated(const CycloVec& o, int64_t j);
    CycloVec conj() const;

    /// Coefficients on the power basis after reduction mod Phi_M.
    std::vector<int64_t> canonical() const;
    /// Same value, raw vector replaced by the canonical form.
    CycloVec canonicalized() const;

    bool is_zero() const;
    bool equals(const CycloVec& o) const;
    /// The represented number as a rational integer, when it is one.
    std::optional<int64_t> rational_value() const;

    /// Exact multiplication by base^exp; for exp < 0 divides the canonical
    /// form and throws std::domain_error if the division is not exact.
    CycloVec scaled_pow_exact(int64_t base, int64_t exp) const;

    /// |value| in double precision.
    double abs_value() const;
    /// |value|^2 as an exact cyclotomic number (this * conj).
    CycloVec abs_square() const;

    /// Reinterpret in Z[zeta_M2]: valid when M | M2, or when the value is
    /// rational.
    CycloVec embedded(int64_t M2) const;

private:
    int64_t M_, p_;
    std::vector<int64_t> c_;
};

/// zeta_E^j as a CycloVec over modulus M. Requires E | M, or E | 2M with M
/// odd (the sign is absorbed into the coefficient).
CycloVec root_of_unity_in(int64_t order, int64_t j, int64_t modulus);

/// Nondegenerate additive character psi of (R/pi^n, +): a Z-linear
/// functional lambda into Z/M with psi(x) = zeta_M^lambda(x), M the
/// additive exponent. Nontrivial on pi^(n-1) R by construction (verified).
/// The seed selects psi_s(x) = psi_0(s x) for a unit s, so all seeds give
/// characters in one unit orbit.
class AdditiveCharacter {
public:
    AdditiveCharacter(const RingSpec& spec, uint64_t seed);

    const RingSpec& spec() const { return spec_; }
    int64_t modulus() const { return M_; }
    const RingElt& twist_unit() const { return twist_; }

    /// lambda(x) in Z/M.
    int64_t exponent(const RingElt& x) const { return lam_[spec_.index_of(x)]; }
    CycloVec value(const RingElt& x) const { return CycloVec::root(M_, exponent(x)); }

private:
    int64_t base_functional(const RingElt& x) const;

    RingSpec spec_;
    int64_t M_;
    RingElt twist_;
    std::vector<int64_t> lam_;  // indexed by element index
};

} // namespace wkl
