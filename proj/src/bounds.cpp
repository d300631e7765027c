#include "wkl/bounds.hpp"

#include <algorithm>
#include <cmath>

#include "wkl/parallel.hpp"

namespace wkl {

namespace {

constexpr double kRelTol = 1e-9;

double q_half_pow(int64_t q, int64_t twice_exp) {
    return std::pow(static_cast<double>(q), static_cast<double>(twice_exp) / 2.0);
}

} // namespace

bool params_closed_forms(const RingSpec& spec, const KlParams& P, std::string* note) {
    const int64_t n = spec.n();
    auto ceil_div = [](int64_t a, int64_t b) { return a > 0 ? (a + b - 1) / b : 0; };
    if (spec.equal_char()) {
        int64_t pv = ipow64(spec.p(), P.v);
        bool ok = P.c == ceil_div(n, pv + 1) && P.c_tilde == ceil_div(n - 1, pv + 1) && P.w == 0;
        if (note) *note = "equal characteristic: c = ceil(n/(p^v+1)), c~ = ceil((n-1)/(p^v+1))";
        return ok;
    }
    if (spec.e() == 1 && n >= 2) {
        bool ok = P.c == std::max<int64_t>(ceil_div(n - P.v, 2), 1) &&
                  P.c_tilde == std::max<int64_t>(ceil_div(n - 1 - P.v, 2), 1) &&
                  P.c + P.c_tilde == std::max<int64_t>(n - P.v, 2);
        // the extra factor gcd(p,2) appears exactly when the j=0 carry
        // condition v+2 <= n-1 is live
        int expect_w = (spec.p() == 2 && P.v >= 1 && P.v + 2 <= n - 1) ? 1 : 0;
        ok = ok && P.w == expect_w;
        if (note) *note = "e = 1: c + c~ = max(n - v, 2); p = 2 may add one carry factor";
        return ok;
    }
    if (note) *note = "no special-case closed form for this ring";
    return true;
}

BoundReport verify_bounds(const RingSpec& spec, const AdditiveCharacter& psi, int64_t k,
                          const KlTable& table, bool with_stationary, int workers) {
    BoundReport R;
    R.spec = spec.describe();
    R.k = k;
    R.params = compute_params(spec, k);
    const auto& P = R.params;
    const int64_t q = spec.q();
    const int n = spec.n();

    R.strict_bound = double(P.k_star) * q_half_pow(q, k * n - P.c - P.c_tilde);
    R.class_bound = double(P.k_prime) * q_half_pow(q, k * n - 2 * P.c_tilde);
    R.lower_target = q_half_pow(q, k * n - P.c - P.c_tilde);
    R.vanish_bound = ipow64(q, P.c + P.c_tilde - 1) * (q - 1);
    // eliminating variables in pairs: for n >= 2 the off-diagonal classes
    // are confined to 1 + pi^(n-1)R and the mass is q^(kn-1)(q-1); at n = 1
    // every unit class contributes and the exact value differs
    R.plancherel_expected = n >= 2 ? ipow64(q, k * n - 1) * (q - 1)
                                   : (1 + (q - 2) * ipow64(q, k)) / (q - 1);
    R.plancherel_reference = std::pow(double(q), double(k * n));

    // exact squared comparisons where the squares are integers
    const int64_t strict2 = P.k_star * P.k_star * ipow64(q, k * n - P.c - P.c_tilde);
    const int64_t class2 = P.k_prime * P.k_prime * ipow64(q, k * n - 2 * P.c_tilde);
    const int64_t lower2 = ipow64(q, k * n - P.c - P.c_tilde);

    const int64_t N = spec.size();
    struct Slot {
        int64_t abs2_int = -1;  // exact |Kl|^2 when rational
        double abs2_dbl = 0.0;
        bool zero = true;
        bool unit = false;
    };
    std::vector<Slot> slots(N);
    std::vector<CycloVec> planch_parts(N, CycloVec(psi.modulus()));
    parallel_for(N, workers, [&](int64_t i) {
        const CycloVec& v = table.values[i];
        Slot s;
        CycloVec a2 = v.abs_square();
        auto r = a2.rational_value();
        if (r) s.abs2_int = *r;
        s.abs2_dbl = r ? double(*r) : a2.abs_value();
        s.zero = v.is_zero();
        s.unit = spec.is_unit(spec.element_at(i));
        if (s.unit) planch_parts[i] = std::move(a2);
        slots[i] = s;
    });
    CycloVec planch(psi.modulus());
    for (int64_t i = 0; i < N; ++i)
        if (slots[i].unit) planch += planch_parts[i];

    double max2 = -1.0;
    for (int64_t i = 0; i < N; ++i) {
        const Slot& s = slots[i];
        if (s.abs2_dbl > max2) { max2 = s.abs2_dbl; R.argmax_index = i; }
        bool over_strict = s.abs2_int >= 0 ? s.abs2_int > strict2
                                           : s.abs2_dbl > double(strict2) * (1 + kRelTol);
        if (over_strict) {
            R.strict_ok = false;
            R.strict_violation_indices.push_back(i);
        }
        bool over_class = s.abs2_int >= 0 ? s.abs2_int > class2
                                          : s.abs2_dbl > double(class2) * (1 + kRelTol);
        if (over_class) R.class_ok = false;
        bool at_least = s.abs2_int >= 0 ? s.abs2_int >= lower2
                                        : s.abs2_dbl >= double(lower2) * (1 - kRelTol);
        if (at_least && !R.lower_found) {
            R.lower_found = true;
            R.lower_witness_index = i;
        }
        if (!s.zero) {
            ++R.nonzero_count;
            if (!s.unit) ++R.nonunit_nonzero_count;
        }
    }
    R.max_abs = std::sqrt(std::max(0.0, max2));
    R.vanish_ok = R.nonzero_count <= R.vanish_bound;
    auto pv = planch.rational_value();
    R.plancherel_computed = pv.value_or(-1);
    R.plancherel_ok = pv.has_value() && *pv == R.plancherel_expected;

    R.closed_form_applies = spec.equal_char() || spec.e() == 1;
    R.closed_form_ok = params_closed_forms(spec, R.params, &R.closed_form_note);

    if (with_stationary && n >= 2) {
        auto sweep = kl_stationary_sweep(spec, psi, k, workers);
        bool all = true;
        for (int64_t i = 0; i < N; ++i) {
            if (!slots[i].unit) continue;
            if (!sweep[i].equals(table.values[i])) { all = false; break; }
        }
        R.stationary_matches = all;
    }
    return R;
}

} // namespace wkl
