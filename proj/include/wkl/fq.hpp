#pragma once

#include <cstdint>
#include <vector>

namespace wkl {

/// Arithmetic tables for the finite field F_q, q = p^f, realized as
/// F_p[u]/(m(u)). Element codes are integers in [0, q): the base-p digit
/// encoding of a polynomial in u of degree < f.
class Fq {
public:
    /// Builds the field with the lexicographically smallest monic
    /// irreducible m(u) of degree f over F_p.
    Fq(int64_t p, int f);
    Fq(int64_t p, int f, std::vector<int64_t> modpoly);

    int64_t p() const { return p_; }
    int f() const { return f_; }
    int64_t q() const { return q_; }
    const std::vector<int64_t>& modpoly() const { return mod_; }

    int64_t add(int64_t a, int64_t b) const { return add_[a * q_ + b]; }
    int64_t sub(int64_t a, int64_t b) const { return add_[a * q_ + neg_[b]]; }
    int64_t neg(int64_t a) const { return neg_[a]; }
    int64_t mul(int64_t a, int64_t b) const { return mul_[a * q_ + b]; }
    int64_t inv(int64_t a) const;
    int64_t pow(int64_t a, int64_t e) const;
    /// Trace to the prime field, a value in [0, p).
    int64_t trace(int64_t a) const { return tr_[a]; }

    std::vector<int64_t> digits(int64_t a) const;
    int64_t from_digits(const std::vector<int64_t>& v) const;

private:
    void build_tables();

    int64_t p_, q_;
    int f_;
    std::vector<int64_t> mod_;
    std::vector<int64_t> add_, mul_, neg_, inv_, tr_;
};

bool is_prime(int64_t m);

/// Deterministic irreducibility test by trial division (desk scale).
bool poly_is_irreducible(const std::vector<int64_t>& m, int64_t p);

/// Lexicographically smallest monic irreducible of degree f over F_p.
std::vector<int64_t> find_irreducible(int64_t p, int f);

} // namespace wkl
