#pragma once

#include <cstdint>
#include <vector>

#include "wkl/fqpoly.hpp"

namespace wkl {

/// Short-interval configuration over F_q[T]: divisor degree m = n-2,
/// interval parameter h = (k-1)(n-2)-1, base points monic of degree
/// k(n-2). Intervals are indexed by the n-1 coefficients just below the
/// leading term, mixed radix with c_1 fastest.
struct IntervalConfig {
    int64_t p = 2;
    int f = 1;
    int64_t k = 2;
    int n = 4;

    int64_t q() const;
    int m() const { return n - 2; }
    int64_t h() const { return (k - 1) * int64_t(n - 2) - 1; }
    int64_t interval_count() const;  // q^(n-1)
    int64_t main_term() const;       // q^((k-1)(n-2)-1)
};

/// Ordered factorizations of a monic f of degree k*m into k monic factors
/// of degree m each.
int64_t restricted_divisor(const Fq& F, const Poly& f, int64_t k, int m);

/// Interval sums of the restricted divisor function for every interval at
/// once (bucketing all q^(mk) factor tuples). OpenMP kernel plus a serial
/// reference.
std::vector<int64_t> interval_sums_all(const IntervalConfig& cfg, int workers = 0);
std::vector<int64_t> interval_sums_all_serial(const IntervalConfig& cfg);

struct IntervalSurvey {
    IntervalConfig cfg;
    std::vector<int64_t> sums;    // per interval index
    std::vector<int64_t> errors;  // sums - main term

    bool identity_ok = false;  // every interval matches the Kloosterman side exactly
    int64_t identity_failures = 0;
    bool total_mass_ok = false;  // sum of sums = q^(k(n-2))

    int64_t nonzero_errors = 0, nonzero_bound = 0;
    bool nonzero_ok = false;
    int64_t error_mass = 0, mass_bound = 0;
    bool mass_ok = false;
    int64_t max_error2 = 0;
    double max_error_target = 0.0;
    bool max_error_ok = false;
};

/// Runs the identity check (divisor sums against the Kloosterman side over
/// F_q[[1/T]] with the top-coefficient character) and the three survey
/// inequalities: nonzero-error count, error mass, and the largest error.
IntervalSurvey interval_survey(const IntervalConfig& cfg, int workers = 0);

} // namespace wkl
