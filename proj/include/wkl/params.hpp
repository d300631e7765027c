#pragma once

#include <cstdint>

#include "wkl/ring.hpp"

namespace wkl {

/// Derived invariants of a (ring, k) pair governing the wild stationary
/// phase: the critical depths c, c_tilde, the carry counts w, w', and the
/// class-count constants k_star = gcd(k, q-1) p^w, k_prime with w'.
struct KlParams {
    int64_t k = 1;
    int v = 0;           // p-adic valuation of k
    int c = 0;           // min s: (p^r+1)s + e(v-r) >= n for all r <= v
    int c_tilde = 0;     // same with n-1
    int w = 0, w_prime = 0;
    int64_t k_star = 1, k_prime = 1;
};

KlParams compute_params(const RingSpec& spec, int64_t k);

/// p-adic valuation of the multinomial coefficient
/// (k + i1 + i2 - 2 choose i1, i2, k-2), k >= 2, by Legendre's formula.
int multinom_valuation(int64_t p, int64_t k, int64_t i1, int64_t i2);

int valuation_int(int64_t p, int64_t m);

} // namespace wkl
