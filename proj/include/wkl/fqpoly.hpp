#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "wkl/fq.hpp"
#include "wkl/ring.hpp"

namespace wkl {

/// Polynomial over F_q: coefficient codes, lowest degree first, no
/// trailing zeros. The zero polynomial is the empty vector.
using Poly = std::vector<int64_t>;

namespace poly {

Poly normalized(Poly a);
int deg(const Poly& a);  // deg 0 = -1
bool is_monic(const Poly& a);
Poly add(const Fq& F, const Poly& a, const Poly& b);
Poly sub(const Fq& F, const Poly& a, const Poly& b);
Poly neg(const Fq& F, const Poly& a);
Poly mul(const Fq& F, const Poly& a, const Poly& b);
std::pair<Poly, Poly> divmod(const Fq& F, const Poly& a, const Poly& b);
/// Monic gcd.
Poly gcd(const Fq& F, Poly a, Poly b);
Poly pow(const Fq& F, Poly base, int64_t e);

/// All q^d monic polynomials of degree d, in lexicographic coefficient
/// order (constant term fastest).
std::vector<Poly> monics(const Fq& F, int d);
bool is_irreducible(const Fq& F, const Poly& a);
std::vector<Poly> irreducibles(const Fq& F, int d);

std::string to_string(const Poly& a);
/// Parses sums of c*T^k terms with integer c (prime-field coefficients),
/// e.g. "T", "T^2+T+1", "2T^3+1".
Poly parse(const std::string& text, const Fq& F);

} // namespace poly

/// The quotient F_q[T] / pi^n for an irreducible pi. Canonical
/// representatives are polynomials of degree <= N = n deg(pi) - 1.
class PolyQuot {
public:
    PolyQuot(std::shared_ptr<const Fq> field, Poly pi, int n);

    const Fq& field() const { return *F_; }
    std::shared_ptr<const Fq> field_ptr() const { return F_; }
    const Poly& pi() const { return pi_; }
    int n() const { return n_; }
    int pi_deg() const { return pi_deg_; }
    int64_t abs_pi() const { return abs_pi_; }  // q^deg(pi)
    int N() const { return N_; }                // n deg(pi) - 1
    int64_t size() const { return size_; }
    int64_t unit_count() const { return unit_count_; }

    Poly reduce(const Poly& a) const;
    bool is_unit(const Poly& a) const;
    Poly mul(const Poly& a, const Poly& b) const;
    Poly pow(const Poly& a, int64_t e) const;
    Poly inv(const Poly& a) const;

    int64_t index_of(const Poly& a) const;
    Poly element_at(int64_t idx) const;
    std::vector<Poly> elements() const;
    std::vector<Poly> units() const;

    /// Coefficient of T^N of the canonical representative, an F_q code.
    int64_t top_coeff(const Poly& a) const;

    /// Count of monic polynomials of degree d coprime to pi (0 for d < 0).
    int64_t coprime_monic_count(int d) const;

private:
    std::shared_ptr<const Fq> F_;
    Poly pi_, modulus_;
    int n_, pi_deg_, N_;
    int64_t abs_pi_, size_, unit_count_;
};

/// Direct-product presentation of (F_q[T]/pi^n)^x found by brute-force
/// order computation: generators with orders whose product is the group
/// order, and the exponent vector of every unit.
class UnitGroupTable {
public:
    explicit UnitGroupTable(const PolyQuot& R);

    const PolyQuot& ring() const { return R_; }
    const std::vector<Poly>& generators() const { return gens_; }
    const std::vector<int64_t>& orders() const { return ords_; }
    int64_t order() const { return order_; }
    int64_t exponent() const { return exponent_; }

    bool is_unit(const Poly& a) const;
    /// Exponent vector of a unit against the generators.
    const std::vector<int64_t>& dlog(const Poly& a) const;
    Poly from_dlog(const std::vector<int64_t>& v) const;

private:
    PolyQuot R_;
    std::vector<Poly> gens_;
    std::vector<int64_t> ords_;
    int64_t order_ = 1, exponent_ = 1;
    std::vector<std::vector<int64_t>> dlog_;  // by element index; empty for non-units
};

} // namespace wkl
