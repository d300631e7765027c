#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "wkl/fq.hpp"

namespace wkl {

/// Thrown when an enumeration or sum would exceed the configured budget.
class BudgetExceeded : public std::runtime_error {
public:
    explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

enum class RingKind { EqualChar, Unramified, Eisenstein };

/// Element of R/pi^n R in canonical digit form. Equality of the digit
/// vectors is equality in the ring.
struct RingElt {
    std::vector<int64_t> d;
    bool operator==(const RingElt&) const = default;
};

/// A finite quotient R/pi^n R of a discrete valuation ring with residue
/// field F_q, q = p^f.
///
/// Canonical element coordinates per kind:
///   EqualChar   F_q[t]/t^n          n digits, each an F_q code
///   Unramified  GR(p^n, f)          f coefficients in [0, p^n), u-basis
///   Eisenstein  (x^e = p, x^n = 0)  n digits in [0, p), x-basis; f = 1
///
/// Enumeration order is lexicographic on digit vectors, first digit
/// varying fastest (= increasing element index).
class RingSpec {
public:
    static RingSpec make(RingKind kind, int64_t p, int f, int64_t e, int n);
    static RingSpec make(RingKind kind, int64_t p, int f, int64_t e, int n,
                         std::vector<int64_t> residue_poly);

    RingKind kind() const { return kind_; }
    int64_t p() const { return p_; }
    int f() const { return f_; }
    /// Ramification index; only meaningful in mixed characteristic.
    int64_t e() const { return e_; }
    int n() const { return n_; }
    int64_t q() const { return q_; }
    bool equal_char() const { return kind_ == RingKind::EqualChar; }
    const Fq& residue_field() const { return *fq_; }

    int64_t size() const { return size_; }                  // q^n
    int64_t unit_count() const { return unit_count_; }      // q^(n-1)(q-1)
    int64_t ideal_size(int s) const;                        // q^(n-s)

    RingElt zero() const;
    RingElt one() const;
    RingElt pi() const;
    RingElt pi_pow(int s) const;
    RingElt from_int(int64_t m) const;

    RingElt add(const RingElt& x, const RingElt& y) const;
    RingElt sub(const RingElt& x, const RingElt& y) const;
    RingElt neg(const RingElt& x) const;
    RingElt mul(const RingElt& x, const RingElt& y) const;
    RingElt pow(const RingElt& x, int64_t e) const;
    /// Unit inverse; throws std::domain_error on a non-unit.
    RingElt inv(const RingElt& x) const;
    RingElt div(const RingElt& x, const RingElt& y) const { return mul(x, inv(y)); }

    /// Largest s with x in pi^s R, capped at n (valuation of 0 is n).
    int valuation(const RingElt& x) const;
    bool is_unit(const RingElt& x) const { return valuation(x) == 0; }
    bool is_zero(const RingElt& x) const;

    /// y with pi^s y = x; requires valuation(x) >= s. Well defined only
    /// modulo pi^(n-s); the representative with vanishing top digits.
    RingElt div_by_pi_pow(const RingElt& x, int s) const;
    /// Canonical representative of x mod pi^s (top digits zeroed).
    RingElt reduce_mod_pi_pow(const RingElt& x, int s) const;

    /// Image in the residue field R/pi, as an F_q code.
    int64_t residue(const RingElt& x) const;
    RingElt lift_residue(int64_t code) const;

    int64_t index_of(const RingElt& x) const;
    RingElt element_at(int64_t idx) const;

    std::vector<RingElt> all_elements(int64_t budget = kDefaultEnumBudget) const;
    std::vector<RingElt> units(int64_t budget = kDefaultEnumBudget) const;
    std::vector<RingElt> ideal_elements(int s, int64_t budget = kDefaultEnumBudget) const;
    /// Generating set of the additive group pi^s R / pi^n R.
    std::vector<RingElt> additive_generators(int s) const;

    /// Smallest M with exp(2 pi i / M)-valued nondegenerate characters:
    /// the exponent of (R/pi^n, +). p for equal characteristic, else
    /// p^ceil(n/e).
    int64_t additive_exponent() const;

    /// Structured text record {kind,p,f,e,n,poly}, parseable by parse().
    std::string describe() const;
    static RingSpec parse(const std::string& text);

    static constexpr int64_t kDefaultEnumBudget = 100000000;

private:
    RingSpec() = default;

    RingKind kind_;
    int64_t p_, e_, q_, size_, unit_count_;
    int f_, n_;
    std::shared_ptr<const Fq> fq_;
    std::vector<int64_t> radices_;  // mixed-radix shape of the digit vector
};

int64_t ipow64(int64_t base, int64_t exp);

} // namespace wkl
