#include "wkl/params.hpp"

#include <numeric>
#include <stdexcept>

namespace wkl {

int valuation_int(int64_t p, int64_t m) {
    if (m == 0) throw std::domain_error("valuation of 0");
    if (m < 0) m = -m;
    int v = 0;
    while (m % p == 0) { m /= p; ++v; }
    return v;
}

namespace {

int64_t ceil_div(int64_t a, int64_t b) { return a >= 0 ? (a + b - 1) / b : 0; }

// min s in N with (p^r+1)s + ev(r) >= nn for all 0 <= r <= v, where the
// ev term is e(v-r) in mixed characteristic and drops all r < v in equal
// characteristic (p^(v-r) = 0 there).
int critical_depth(const RingSpec& spec, int v, int nn) {
    int64_t best = 0;
    int64_t pr = 1;  // p^r
    for (int r = 0; r <= v; ++r, pr *= spec.p()) {
        if (spec.equal_char() && r < v) continue;
        int64_t ev = spec.equal_char() ? 0 : spec.e() * (v - r);
        best = std::max(best, ceil_div(nn - ev, pr + 1));
    }
    return static_cast<int>(best);
}

} // namespace

KlParams compute_params(const RingSpec& spec, int64_t k) {
    if (k < 1) throw std::invalid_argument("k must be >= 1");
    KlParams P;
    P.k = k;
    P.v = valuation_int(spec.p(), k);
    P.c = critical_depth(spec, P.v, spec.n());
    P.c_tilde = critical_depth(spec, P.v, spec.n() - 1);
    const int64_t p = spec.p();
    if (!spec.equal_char()) {
        int64_t pj = 1;  // p^j
        for (int j = 0; j < P.v; ++j, pj *= p) {
            int64_t pj_pm1 = pj * (p - 1);
            if (spec.e() % pj_pm1 != 0) continue;
            // e(v-j) + (p^j+1) e / (p^j (p-1)), an integer by the divisibility
            int64_t val = spec.e() * (P.v - j) + (spec.e() / pj_pm1) * (pj + 1);
            if (val <= spec.n() - 1) ++P.w;
            if (val < spec.n() - 1) ++P.w_prime;
        }
    }
    int64_t g = std::gcd(k, spec.q() - 1);
    P.k_star = g * ipow64(p, P.w);
    P.k_prime = g * ipow64(p, P.w_prime);
    return P;
}

int multinom_valuation(int64_t p, int64_t k, int64_t i1, int64_t i2) {
    if (k < 2) throw std::invalid_argument("multinomial valuation requires k >= 2");
    if (i1 < 0 || i2 < 0) throw std::invalid_argument("negative multinomial part");
    auto vfact = [p](int64_t m) {
        int64_t v = 0;
        for (int64_t pw = p; pw <= m; pw *= p) v += m / pw;
        return v;
    };
    return static_cast<int>(vfact(k + i1 + i2 - 2) - vfact(i1) - vfact(i2) - vfact(k - 2));
}

} // namespace wkl
