#include "wkl/intervals.hpp"

#include <cmath>
#include <stdexcept>

#include "wkl/kloosterman.hpp"
#include "wkl/parallel.hpp"

namespace wkl {

int64_t IntervalConfig::q() const { return ipow64(p, f); }
int64_t IntervalConfig::interval_count() const { return ipow64(q(), n - 1); }
int64_t IntervalConfig::main_term() const { return ipow64(q(), h()); }

int64_t restricted_divisor(const Fq& F, const Poly& f, int64_t k, int m) {
    if (poly::deg(f) != static_cast<int>(k) * m || !poly::is_monic(f))
        throw std::invalid_argument("restricted divisor count needs a monic f of degree k*m");
    if (k == 1) return 1;
    int64_t count = 0;
    for (const auto& g : poly::monics(F, m)) {
        auto [quot, rem] = poly::divmod(F, f, g);
        if (rem.empty()) count += restricted_divisor(F, quot, k - 1, m);
    }
    return count;
}

namespace {

// bucket all k-tuples of monic degree-m factors by interval index
void bucket_tuples(const IntervalConfig& cfg, const Fq& F, const std::vector<Poly>& monic_m,
                   int64_t first, std::vector<int64_t>& sums) {
    const int m = cfg.m(), n = cfg.n;
    const int64_t kd = cfg.k * m;
    std::vector<int64_t> odo(cfg.k - 1, 0);
    const int64_t count = static_cast<int64_t>(monic_m.size());
    while (true) {
        Poly prod = monic_m[first];
        for (int64_t i : odo) prod = poly::mul(F, prod, monic_m[i]);
        int64_t idx = 0;
        for (int i = n - 1; i >= 1; --i) {
            int64_t coeff = kd - i < static_cast<int64_t>(prod.size()) ? prod[kd - i] : 0;
            idx = idx * F.q() + coeff;
        }
        ++sums[idx];
        size_t pos = 0;
        while (pos < odo.size() && ++odo[pos] == count) odo[pos++] = 0;
        if (pos == odo.size()) break;
    }
}

} // namespace

std::vector<int64_t> interval_sums_all(const IntervalConfig& cfg, int workers) {
    if (cfg.n < 3 || cfg.h() < 0) throw std::invalid_argument("interval survey needs n >= 3, k >= 2");
    Fq F(cfg.p, cfg.f);
    auto monic_m = poly::monics(F, cfg.m());
    const int64_t first_count = static_cast<int64_t>(monic_m.size());
    const int64_t nintervals = cfg.interval_count();
    const int W = effective_workers(workers);
    std::vector<std::vector<int64_t>> parts(W, std::vector<int64_t>(nintervals, 0));
#ifdef _OPENMP
#pragma omp parallel num_threads(W)
    {
        auto& mine = parts[thread_index()];
#pragma omp for schedule(static)
        for (int64_t first = 0; first < first_count; ++first)
            bucket_tuples(cfg, F, monic_m, first, mine);
    }
#else
    for (int64_t first = 0; first < first_count; ++first)
        bucket_tuples(cfg, F, monic_m, first, parts[0]);
#endif
    std::vector<int64_t> sums(nintervals, 0);
    for (const auto& part : parts)
        for (int64_t i = 0; i < nintervals; ++i) sums[i] += part[i];
    return sums;
}

std::vector<int64_t> interval_sums_all_serial(const IntervalConfig& cfg) {
    if (cfg.n < 3 || cfg.h() < 0) throw std::invalid_argument("interval survey needs n >= 3, k >= 2");
    Fq F(cfg.p, cfg.f);
    auto monic_m = poly::monics(F, cfg.m());
    std::vector<int64_t> sums(cfg.interval_count(), 0);
    for (int64_t first = 0; first < static_cast<int64_t>(monic_m.size()); ++first)
        bucket_tuples(cfg, F, monic_m, first, sums);
    return sums;
}

IntervalSurvey interval_survey(const IntervalConfig& cfg, int workers) {
    IntervalSurvey S;
    S.cfg = cfg;
    S.sums = interval_sums_all(cfg, workers);
    const int64_t q = cfg.q(), main = cfg.main_term();
    const int n = cfg.n;

    // Kloosterman side over F_q[[1/T]] / pi^n, psi = top-coefficient character
    auto ring = RingSpec::make(RingKind::EqualChar, cfg.p, cfg.f, 0, n);
    AdditiveCharacter psi(ring, 0);
    auto kl = kl_brute_table(ring, psi, cfg.k);
    S.identity_failures = 0;
    std::vector<int64_t> ident_fail(S.sums.size(), 0);
    parallel_for(static_cast<int64_t>(S.sums.size()), workers, [&](int64_t ix) {
        // x_c = 1 + c_1 t + ... + c_(n-1) t^(n-1), the base point over 1/T
        RingElt xc = ring.zero();
        xc.d[0] = 1;
        int64_t t = ix;
        for (int i = 1; i < n; ++i) { xc.d[i] = t % q; t /= q; }
        CycloVec rhs(psi.modulus());
        for (int64_t a = 1; a < q; ++a)
            rhs += kl.at(ring, ring.mul(ring.lift_residue(a), xc));
        auto r = rhs.rational_value();
        bool ok = r.has_value() && (S.sums[ix] - main) * ipow64(q, cfg.k) == *r;
        ident_fail[ix] = ok ? 0 : 1;
    });
    for (int64_t f : ident_fail) S.identity_failures += f;
    S.identity_ok = S.identity_failures == 0;

    int64_t total = 0;
    S.errors.resize(S.sums.size());
    for (size_t i = 0; i < S.sums.size(); ++i) {
        total += S.sums[i];
        S.errors[i] = S.sums[i] - main;
    }
    S.total_mass_ok = total == ipow64(q, cfg.k * cfg.m());

    const int vp = valuation_int(cfg.p, cfg.k);
    const int64_t pv = ipow64(cfg.p, vp);
    auto ceil_div = [](int64_t a, int64_t b) { return a > 0 ? (a + b - 1) / b : 0; };
    const int64_t cc = ceil_div(n, pv + 1), ct = ceil_div(n - 1, pv + 1);

    S.nonzero_bound = ipow64(q, cc + ct - 1) * (q - 1);
    for (int64_t e : S.errors) {
        if (e != 0) ++S.nonzero_errors;
        S.error_mass += e * e;
        S.max_error2 = std::max(S.max_error2, e * e);
    }
    S.nonzero_ok = S.nonzero_errors <= S.nonzero_bound;
    S.mass_bound = ipow64(q, cfg.k * (n - 3)) * ipow64(q - 1, cfg.k);
    S.mass_ok = S.error_mass >= S.mass_bound;
    // max |error| >= q^(Ex/2) (q-1)^((k-1)/2) with Ex = k(n-3) - c - ct + 1,
    // compared exactly on squares
    const int64_t Ex = cfg.k * (n - 3) - cc - ct + 1;
    const int64_t qm1k = ipow64(q - 1, cfg.k - 1);
    if (Ex >= 0)
        S.max_error_ok = S.max_error2 >= ipow64(q, Ex) * qm1k;
    else
        S.max_error_ok = S.max_error2 * ipow64(q, -Ex) >= qm1k;
    S.max_error_target =
        std::pow(double(q), double(Ex) / 2.0) * std::pow(double(q - 1), double(cfg.k - 1) / 2.0);
    return S;
}

} // namespace wkl
