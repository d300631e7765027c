// Acceptance suite: one check per numbered criterion, each printing a
// single PASS/FAIL line (plus failure details). Returns nonzero if any
// selected criterion fails.
//
// Usage: wkl-acceptance [--cli path-to-wkl] [criterion numbers...]

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <vector>

#include "wkl/bounds.hpp"
#include "wkl/grid.hpp"
#include "wkl/intervals.hpp"
#include "wkl/moments.hpp"
#include "wkl/report.hpp"

using namespace wkl;
using clock_type = std::chrono::steady_clock;

namespace {

constexpr int64_t kBudget = 100000000;
constexpr uint64_t kSeed = 0;

struct PairData {
    RingSpec spec;
    int64_t k;
    KlTable table;
};

// (spec, k) pairs of the acceptance grid with their Kloosterman tables,
// built once and shared by the criteria.
std::vector<PairData>& grid_tables() {
    static std::vector<PairData> cache;
    if (cache.empty()) {
        for (const auto& s : default_grid()) {
            AdditiveCharacter psi(s, kSeed);
            for (int64_t k : default_k_list()) {
                if (!within_budget(s, k, kBudget)) continue;
                cache.push_back(PairData{s, k, kl_brute_table(s, psi, k, kBudget)});
            }
        }
    }
    return cache;
}

std::string pair_name(const RingSpec& s, int64_t k) {
    return s.describe() + " k=" + std::to_string(k);
}

// ---------------------------------------------------------------- 1
bool crit1_oracle(std::string& detail) {
    bool ok = true;
    std::ostringstream os;
    int pairs = 0;
    for (auto& pd : grid_tables()) {
        if (pd.spec.n() < 2) continue;
        ++pairs;
        AdditiveCharacter psi(pd.spec, kSeed);
        auto sweep = kl_stationary_sweep(pd.spec, psi, pd.k);
        for (int64_t i = 0; i < pd.spec.size(); ++i) {
            if (!pd.spec.is_unit(pd.spec.element_at(i))) continue;
            if (!sweep[i].equals(pd.table.values[i])) {
                ok = false;
                os << "\n    mismatch at " << pair_name(pd.spec, pd.k)
                   << " x=" << element_string(pd.spec, i);
                break;
            }
        }
    }
    os << "\n    " << pairs << " (ring, k) pairs, every unit exact";
    detail = os.str();
    return ok;
}

// ---------------------------------------------------------------- 2..5
BoundReport& bound_report_for(size_t idx) {
    static std::map<size_t, BoundReport> cache;
    auto it = cache.find(idx);
    if (it == cache.end()) {
        auto& pd = grid_tables()[idx];
        AdditiveCharacter psi(pd.spec, kSeed);
        it = cache.emplace(idx, verify_bounds(pd.spec, psi, pd.k, pd.table)).first;
    }
    return it->second;
}

bool crit2_upper(std::string& detail) {
    bool ok = true;
    std::ostringstream os;
    for (size_t i = 0; i < grid_tables().size(); ++i) {
        auto& pd = grid_tables()[i];
        if (pd.spec.n() < 2) continue;
        auto& R = bound_report_for(i);
        if (!R.strict_ok) {
            ok = false;
            os << "\n    |Kl| > k* q^((kn-c-ct)/2) at " << pair_name(pd.spec, pd.k)
               << ": max " << format_double(R.max_abs) << " vs bound "
               << format_double(R.strict_bound) << ", witness x="
               << element_string(pd.spec, R.strict_violation_indices.front())
               << " (class bound k' q^(kn/2-ct) = " << format_double(R.class_bound)
               << (R.class_ok ? " holds)" : " fails)");
        }
    }
    if (!ok)
        os << "\n    the strict bound is falsified at the listed pairs; "
              "the class-count bound holds everywhere";
    detail = os.str();
    return ok;
}

bool crit3_lower(std::string& detail) {
    bool ok = true;
    std::ostringstream os;
    for (size_t i = 0; i < grid_tables().size(); ++i) {
        auto& pd = grid_tables()[i];
        if (pd.spec.n() < 2 || pd.k < 2) continue;
        auto& R = bound_report_for(i);
        if (!R.lower_found) {
            ok = false;
            os << "\n    no witness with |Kl| >= q^((kn-c-ct)/2) at " << pair_name(pd.spec, pd.k);
        }
    }
    // the q=2, n=2, k=2 case attains the target with equality |Kl| = 2
    auto f2t2 = RingSpec::make(RingKind::EqualChar, 2, 1, 0, 2);
    AdditiveCharacter psi(f2t2, kSeed);
    auto tab = kl_brute_table(f2t2, psi, 2);
    auto v = tab.at(f2t2, f2t2.one()).rational_value();
    if (!(v && *v == 2)) {
        ok = false;
        os << "\n    equality case Kl_2(1) = 2 over F_2[t]/t^2 failed";
    }
    detail = os.str();
    return ok;
}

bool crit4_vanishing(std::string& detail) {
    bool ok = true;
    std::ostringstream os;
    for (size_t i = 0; i < grid_tables().size(); ++i) {
        auto& pd = grid_tables()[i];
        if (pd.spec.n() < 2 || pd.k < 2) continue;
        auto& R = bound_report_for(i);
        if (!R.vanish_ok) {
            ok = false;
            os << "\n    nonzero count " << R.nonzero_count << " > bound " << R.vanish_bound
               << " at " << pair_name(pd.spec, pd.k);
        }
    }
    int64_t k1_overruns = 0;
    for (size_t i = 0; i < grid_tables().size(); ++i) {
        auto& pd = grid_tables()[i];
        if (pd.k == 1 && pd.spec.n() >= 2) k1_overruns += !bound_report_for(i).vanish_ok;
    }
    os << "\n    k = 1 rows logged, not asserted (" << k1_overruns
       << " exceed the bound: Kl_1 never vanishes)";
    // F_2[t]/t^2, k = 2: exactly 2 nonzero values = the bound
    auto f2t2 = RingSpec::make(RingKind::EqualChar, 2, 1, 0, 2);
    AdditiveCharacter psi(f2t2, kSeed);
    auto tab = kl_brute_table(f2t2, psi, 2);
    int count = 0;
    for (const auto& v : tab.values) count += !v.is_zero();
    if (count != 2) {
        ok = false;
        os << "\n    expected exactly 2 nonzero values over F_2[t]/t^2, k=2, found " << count;
    }
    detail = os.str();
    return ok;
}

bool crit5_plancherel(std::string& detail) {
    bool ok = true;
    std::ostringstream os;
    int64_t pairs = 0;
    for (size_t i = 0; i < grid_tables().size(); ++i) {
        auto& pd = grid_tables()[i];
        auto& R = bound_report_for(i);
        ++pairs;
        if (!R.plancherel_ok) {
            ok = false;
            os << "\n    sum over units of |Kl|^2 = " << R.plancherel_computed
               << " != q^(kn-1)(q-1) = " << R.plancherel_expected << " at "
               << pair_name(pd.spec, pd.k);
        }
        // mass / count bound = q^(kn-c-ct), the squared witness target
        const auto& P = R.params;
        int64_t q = pd.spec.q();
        if (pd.spec.n() >= 2 &&
            R.plancherel_expected != R.vanish_bound * ipow64(q, pd.k * pd.spec.n() - P.c - P.c_tilde)) {
            ok = false;
            os << "\n    mass/count identity failed at " << pair_name(pd.spec, pd.k);
        }
    }
    os << "\n    " << pairs << " pairs exact; the uncorrected reference constant q^(kn) is "
          "carried in every report";
    detail = os.str();
    return ok;
}

// ---------------------------------------------------------------- 6
bool crit6_properties(std::string& detail) {
    bool ok = true;
    std::ostringstream os;
    int64_t degenerate_pairs = 0, degenerate_counterexamples = 0;
    for (auto& pd : grid_tables()) {
        const auto& s = pd.spec;
        const int64_t k = pd.k;
        if (s.n() < 2) continue;
        AdditiveCharacter psi(s, kSeed);
        auto P = compute_params(s, k);
        const bool tame = (k - 1) % s.p() != 0;  // proofs divide by k-1
        auto units = s.units();
        auto elems = s.all_elements();
        std::vector<std::vector<char>> memb(units.size(), std::vector<char>(elems.size(), 0));
        for (size_t i = 0; i < units.size(); ++i)
            for (size_t j = 0; j < elems.size(); ++j)
                memb[i][j] =
                    critical_set_member(s, psi, k, units[i], elems[j], P.c, true).member;
        // membership depends only on a mod pi^c_tilde (all k)
        for (size_t j = 0; j < elems.size() && ok; ++j) {
            std::map<int64_t, char> cls;
            for (size_t i = 0; i < units.size(); ++i) {
                int64_t key = s.index_of(s.reduce_mod_pi_pow(units[i], P.c_tilde));
                auto [it, fresh] = cls.emplace(key, memb[i][j]);
                if (!fresh && it->second != memb[i][j]) {
                    ok = false;
                    os << "\n    class dependence failed at " << pair_name(s, k);
                }
            }
        }
        if (!tame) {
            // the three statements whose derivations divide by k-1 are evaluated but
            // not asserted here; observed counterexamples are counted
            ++degenerate_pairs;
            bool counterexample = false;
            if (s.n() % 2 == 0)
                for (size_t i = 0; i < units.size() && !counterexample; ++i)
                    for (size_t j = 0; j < elems.size(); ++j)
                        if (memb[i][j] &&
                            s.valuation(s.sub(s.pow(units[i], k), elems[j])) < s.n() / 2) {
                            counterexample = true;
                            break;
                        }
            for (size_t j = 0; j < elems.size() && !counterexample; ++j) {
                std::set<int64_t> classes;
                for (size_t i = 0; i < units.size(); ++i)
                    if (memb[i][j])
                        classes.insert(s.index_of(s.reduce_mod_pi_pow(units[i], P.c_tilde)));
                counterexample = static_cast<int64_t>(classes.size()) > P.k_prime;
            }
            degenerate_counterexamples += counterexample;
            continue;
        }
        // E-to-power (even n)
        if (s.n() % 2 == 0)
            for (size_t i = 0; i < units.size() && ok; ++i)
                for (size_t j = 0; j < elems.size(); ++j)
                    if (memb[i][j] &&
                        s.valuation(s.sub(s.pow(units[i], k), elems[j])) < s.n() / 2) {
                        ok = false;
                        os << "\n    power congruence failed at " << pair_name(s, k);
                        break;
                    }
        // unique x-class mod pi^(n-c) per a
        for (size_t i = 0; i < units.size() && ok; ++i) {
            std::map<int64_t, char> cls;
            int64_t members = 0;
            for (size_t j = 0; j < elems.size(); ++j) {
                int64_t key = s.index_of(s.reduce_mod_pi_pow(elems[j], s.n() - P.c));
                auto [it, fresh] = cls.emplace(key, memb[i][j]);
                if (!fresh && it->second != memb[i][j]) {
                    ok = false;
                    os << "\n    x-class dependence failed at " << pair_name(s, k);
                    break;
                }
                if (fresh) members += memb[i][j];
            }
            if (ok && members != 1) {
                ok = false;
                os << "\n    x-class count " << members << " != 1 at " << pair_name(s, k);
            }
        }
        // at most k' classes of a per x
        for (size_t j = 0; j < elems.size() && ok; ++j) {
            std::set<int64_t> classes;
            for (size_t i = 0; i < units.size(); ++i)
                if (memb[i][j])
                    classes.insert(s.index_of(s.reduce_mod_pi_pow(units[i], P.c_tilde)));
            if (static_cast<int64_t>(classes.size()) > P.k_prime) {
                ok = false;
                os << "\n    " << classes.size() << " classes > k' = " << P.k_prime << " at "
                   << pair_name(s, k);
            }
        }
        // homomorphism identity for the inverse-power increments
        auto ideal = s.ideal_elements(P.c);
        for (size_t ui = 0; ui < units.size() && ok; ui += 2) {
            for (const auto& y1 : ideal)
                for (const auto& y2 : ideal) {
                    RingElt t = s.add(
                        s.sub(s.pow(s.inv(s.add(s.add(units[ui], y1), y2)), k - 1),
                              s.pow(s.inv(s.add(units[ui], y1)), k - 1)),
                        s.sub(s.pow(s.inv(units[ui]), k - 1),
                              s.pow(s.inv(s.add(units[ui], y2)), k - 1)));
                    if (!s.is_zero(t)) {
                        ok = false;
                        os << "\n    increment homomorphism failed at " << pair_name(s, k);
                        break;
                    }
                }
        }
        // k-th power depends on a mod pi^c (and mod pi^c_tilde when v > 0)
        const int half_up = (s.n() + 1) / 2;
        for (size_t ui = 0; ui < units.size() && ok; ui += 2) {
            for (int lvl : {P.c, P.v > 0 ? P.c_tilde : P.c})
                for (const auto& z : s.ideal_elements(lvl))
                    if (s.valuation(s.sub(s.pow(s.add(units[ui], z), k), s.pow(units[ui], k))) <
                        half_up) {
                        ok = false;
                        os << "\n    k-th power class dependence failed at " << pair_name(s, k);
                        break;
                    }
        }
        // multinomial carry bound with strictness
        if (k >= 2) {
            int64_t pv = ipow64(s.p(), P.v);
            for (int64_t i1 = 1; i1 <= 2 * pv && ok; ++i1)
                for (int64_t i2 = 1; i2 <= 2 * pv; ++i2) {
                    bool found = false;
                    int64_t pr = 1;
                    for (int r = 0; r <= P.v + 1 && !found; ++r, pr *= s.p()) {
                        if (i1 + i2 < pr + 1) break;
                        if (multinom_valuation(s.p(), k, i1, i2) < P.v - r) continue;
                        bool strict = i1 + i2 > pr + 1 ||
                                      multinom_valuation(s.p(), k, i1, i2) > P.v - r;
                        if (strict || (i1 == pr && i2 == 1) || (i1 == 1 && i2 == pr)) found = true;
                    }
                    if (!found) {
                        ok = false;
                        os << "\n    multinomial bound failed at p=" << s.p() << " k=" << k
                           << " (" << i1 << "," << i2 << ")";
                        break;
                    }
                }
        }
        // Gauss magnitude cases, exhaustive over alpha, beta != 0
        if (k >= 2 && s.n() >= 2) {
            for (int64_t alpha = 0; alpha < s.q() && ok; ++alpha)
                for (int64_t beta = 1; beta < s.q(); ++beta) {
                    auto g = gauss_gk_brute(s, psi, k, alpha, beta);
                    auto m = gauss_gk_magnitude(s, psi, k, alpha, beta);
                    if (std::abs(g.abs_value() - m.value) > 1e-6 * std::max(1.0, m.value) ||
                        (m.vanishes && !g.is_zero())) {
                        ok = false;
                        os << "\n    Gauss magnitude case failed at " << pair_name(s, k);
                        break;
                    }
                }
        }
    }
    // generic Gauss bound on >= 50 random quadratic phases
    std::mt19937 rng(2024);
    int trials = 0;
    for (int t = 0; t < 60 && ok; ++t) {
        int which = t % 3;
        Fq F(which == 2 ? 2 : (which == 0 ? 2 : 3), which == 2 ? 2 : 1);
        int dim = 1 + int(rng() % 3);
        int64_t q = F.q(), V = 1;
        for (int i = 0; i < dim; ++i) V *= q;
        std::vector<int64_t> A(dim * dim), B(dim), ph(V);
        for (auto& x : A) x = rng() % q;
        for (auto& x : B) x = rng() % q;
        for (int64_t v = 0; v < V; ++v) {
            int64_t val = 0, tmp = v;
            std::vector<int64_t> coord(dim);
            for (int i = 0; i < dim; ++i) { coord[i] = tmp % q; tmp /= q; }
            for (int i = 0; i < dim; ++i) {
                val = F.add(val, F.mul(B[i], coord[i]));
                for (int j = 0; j < dim; ++j)
                    val = F.add(val, F.mul(A[i * dim + j], F.mul(coord[i], coord[j])));
            }
            ph[v] = F.trace(val);
        }
        auto r = generic_gauss(F, dim, F.p(), ph);
        ++trials;
        if (std::abs(r.direct - r.predicted) > 1e-7 * std::max(1.0, r.predicted)) {
            ok = false;
            os << "\n    generic Gauss magnitude failed on random phase " << t;
        }
    }
    os << "\n    " << trials << " random phases; " << degenerate_pairs
       << " degenerate (p | k-1) pairs carry " << degenerate_counterexamples
       << " observed counterexamples to the three k-1-sensitive statements (reported, not asserted)";
    detail = os.str();
    return ok;
}

// ---------------------------------------------------------------- 7, 8
std::vector<IntervalSurvey>& surveys() {
    static std::vector<IntervalSurvey> cache;
    if (cache.empty())
        for (const auto& c : default_interval_configs()) cache.push_back(interval_survey(c));
    return cache;
}

bool crit7_interval_identity(std::string& detail) {
    bool ok = true;
    std::ostringstream os;
    for (const auto& S : surveys()) {
        if (!S.identity_ok || !S.total_mass_ok) {
            ok = false;
            os << "\n    identity failed at q=" << S.cfg.q() << " k=" << S.cfg.k
               << " n=" << S.cfg.n << " (" << S.identity_failures << " intervals)";
        }
    }
    os << "\n    " << surveys().size() << " configurations, every interval exact";
    detail = os.str();
    return ok;
}

bool crit8_interval_survey(std::string& detail) {
    bool ok = true;
    std::ostringstream os;
    for (const auto& S : surveys()) {
        if (!S.nonzero_ok || !S.mass_ok || !S.max_error_ok) {
            ok = false;
            os << "\n    survey inequality failed at q=" << S.cfg.q() << " k=" << S.cfg.k
               << " n=" << S.cfg.n << " nonzero " << S.nonzero_errors << "/" << S.nonzero_bound
               << " mass " << S.error_mass << "/" << S.mass_bound << " max^2 " << S.max_error2;
        }
    }
    detail = os.str();
    return ok;
}

// ---------------------------------------------------------------- 9, 10
CharacterFamily make_family(int64_t p, int f, const char* pi, int n) {
    auto F = std::make_shared<Fq>(p, f);
    return CharacterFamily(PolyQuot(F, poly::parse(pi, *F), n));
}

bool crit9_moments_k1(std::string& detail) {
    bool ok = true;
    std::ostringstream os;
    struct Case { int64_t p; int f; const char* pi; int n; };
    for (const auto& c : std::vector<Case>{{3, 1, "T", 2}, {3, 1, "T", 3}, {2, 2, "T", 2},
                                           {2, 1, "T^2+T+1", 2}}) {
        auto fam = make_family(c.p, c.f, c.pi, c.n);
        const auto& R = fam.ring();
        for (const auto& a : R.units()) {
            for (const auto& d : enumerate_diagonals(fam, a, R.N(), R.N(), false)) {
                auto direct = c_gh_direct(fam, a, d).rational_value();
                if (!direct || *direct != c_gh_closed(fam, a, d)) {
                    ok = false;
                    os << "\n    C_{g,h} mismatch at q=" << R.field().q() << " a="
                       << poly::to_string(a);
                }
            }
            for (int d1 = 0; d1 <= R.N(); ++d1)
                for (int d2 = 0; d2 <= R.N(); ++d2)
                    if (!moment_coeff_dual(fam, a, d1, d2).equal) {
                        ok = false;
                        os << "\n    coefficient-average mismatch at q=" << R.field().q()
                           << " a=" << poly::to_string(a) << " (" << d1 << "," << d2 << ")";
                    }
            auto ck = cfkrs_k1_check(fam, a);
            if (!ck.within_explicit || !ck.within_sharper) {
                ok = false;
                os << "\n    coefficient difference " << format_double(ck.total_coeff_diff)
                   << " above a bound at q=" << R.field().q() << " a=" << poly::to_string(a);
            }
        }
    }
    detail = os.str();
    return ok;
}

bool crit10_epsilon(std::string& detail) {
    bool ok = true;
    std::ostringstream os;
    struct Case { int64_t p; int f; const char* pi; int n; int64_t k; };
    for (const auto& c : std::vector<Case>{{3, 1, "T", 2, 3}, {3, 1, "T", 3, 3},
                                           {2, 2, "T", 2, 2}, {3, 1, "T", 2, 1}}) {
        auto fam = make_family(c.p, c.f, c.pi, c.n);
        for (const auto& chi : fam.family()) {
            auto L = l_coefficients(fam, chi);
            if (!epsilon_modulus_exact(fam, L) || !functional_equation_exact(fam, L)) {
                ok = false;
                os << "\n    functional equation failed at q=" << fam.ring().field().q()
                   << " n=" << c.n;
            }
        }
        for (const auto& a : fam.ring().units()) {
            auto em = epsilon_moment_check(fam, a, c.k);
            if (!em.corrected_minus) {
                ok = false;
                os << "\n    epsilon-moment identity failed at q=" << fam.ring().field().q()
                   << " n=" << c.n << " k=" << c.k << " a=" << poly::to_string(a)
                   << " resolved=" << em.resolved;
            }
        }
        auto lb = epsilon_moment_lower_bound(fam, c.k);
        if (!lb.second_moment_exact) {
            ok = false;
            os << "\n    epsilon second-moment identity failed at q=" << fam.ring().field().q()
               << " n=" << c.n;
        }
    }
    os << "\n    resolved convention: proof sign, group-order-scaled constant, "
          "even-character correction";
    detail = os.str();
    return ok;
}

// ---------------------------------------------------------------- 11
std::string cli_path;  // set from --cli

bool crit11_determinism(std::string& detail) {
    std::ostringstream os;
    bool ok = true;
    // in-process: serialized verify-style reports for two worker counts
    for (int pass = 0; pass < 1; ++pass) {
        std::string r1, r2;
        for (int workers : {1, 4}) {
            ordered_json rep = report_envelope("verify");
            rep["reports"] = ordered_json::array();
            for (const auto& s : {RingSpec::make(RingKind::Unramified, 3, 1, 1, 3),
                                  RingSpec::make(RingKind::EqualChar, 2, 1, 0, 4)}) {
                AdditiveCharacter psi(s, kSeed);
                for (int64_t k : {2, 3}) {
                    auto tab = kl_brute_table(s, psi, k, kBudget, workers);
                    auto R = verify_bounds(s, psi, k, tab, true, workers);
                    rep["reports"].push_back(bound_report_json(R, s));
                }
            }
            auto S = interval_survey(IntervalConfig{2, 1, 2, 4}, workers);
            rep["intervals"] = interval_survey_json(S);
            (workers == 1 ? r1 : r2) = rep.dump(2);
        }
        if (r1 != r2) {
            ok = false;
            os << "\n    in-process reports differ between worker counts";
        }
    }
    if (!cli_path.empty()) {
        std::string base = " verify --spec unramified:p=3,f=1,e=1,n=2 --spec equal-char:p=2,f=1,e=0,n=4 --k 2 --k 3";
        std::string f1 = "/tmp/wkl_det_1.json", f4 = "/tmp/wkl_det_4.json";
        std::string c1 = cli_path + base + " --workers 1 --out " + f1;
        std::string c4 = cli_path + base + " --workers 4 --out " + f4;
        int rc1 = std::system(c1.c_str());
        int rc4 = std::system(c4.c_str());
        (void)rc1; (void)rc4;  // verify may exit 1 on falsification; bytes are what matter
        std::ifstream i1(f1, std::ios::binary), i4(f4, std::ios::binary);
        std::stringstream s1, s4;
        s1 << i1.rdbuf();
        s4 << i4.rdbuf();
        if (!i1 || !i4 || s1.str().empty() || s1.str() != s4.str()) {
            ok = false;
            os << "\n    CLI verify outputs differ between --workers 1 and --workers 4";
        } else {
            os << "\n    CLI verify byte-identical across worker counts";
        }
    }
    detail = os.str();
    return ok;
}

} // namespace

int main(int argc, char** argv) {
    std::vector<int> wanted;
    for (int i = 1; i < argc; ++i) {
        std::string arg = argv[i];
        if (arg == "--cli" && i + 1 < argc) {
            cli_path = argv[++i];
        } else {
            wanted.push_back(std::atoi(arg.c_str()));
        }
    }
    struct Criterion {
        int number;
        const char* name;
        std::function<bool(std::string&)> run;
        double seconds_budget;  // 0 = untimed
    };
    std::vector<Criterion> criteria = {
        {1, "stationary phase equals brute force on every unit", crit1_oracle, 60.0},
        {2, "upper bound k* q^((kn-c-ct)/2) for every x", crit2_upper, 0.0},
        {3, "witness with |Kl| >= q^((kn-c-ct)/2) for k >= 2", crit3_lower, 0.0},
        {4, "nonzero count <= q^(c+ct-1)(q-1) for k >= 2", crit4_vanishing, 0.0},
        {5, "second moment over units = q^(kn-1)(q-1) exactly", crit5_plancherel, 0.0},
        {6, "structural property suite", crit6_properties, 0.0},
        {7, "short-interval identity exact on every interval", crit7_interval_identity, 120.0},
        {8, "interval survey inequalities", crit8_interval_survey, 0.0},
        {9, "twisted moment coefficients at k = 1", crit9_moments_k1, 120.0},
        {10, "epsilon-moment identity and functional equation", crit10_epsilon, 0.0},
        {11, "byte-identical reports for any worker count", crit11_determinism, 0.0},
    };
    bool all_ok = true;
    for (auto& c : criteria) {
        if (!wanted.empty() &&
            std::find(wanted.begin(), wanted.end(), c.number) == wanted.end())
            continue;
        auto t0 = clock_type::now();
        std::string detail;
        bool ok = false;
        try {
            ok = c.run(detail);
        } catch (const std::exception& e) {
            detail = std::string("\n    exception: ") + e.what();
        }
        double secs = std::chrono::duration<double>(clock_type::now() - t0).count();
        if (c.seconds_budget > 0 && secs >= c.seconds_budget) {
            ok = false;
            detail += "\n    runtime budget exceeded";
        }
        std::printf("[%s] criterion %2d: %s (%.2fs)%s\n", ok ? "PASS" : "FAIL", c.number, c.name,
                    secs, detail.c_str());
        std::fflush(stdout);
        all_ok = all_ok && ok;
    }
    return all_ok ? 0 : 1;
}
