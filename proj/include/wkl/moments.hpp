#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "wkl/dirichlet.hpp"

namespace wkl {

/// One multi-diagonal datum: coprime monic g, h prime to pi with
/// a = beta g/h mod pi^(n-1) for the (unique) scalar beta.
struct Diagonal {
    Poly g, h;
    int64_t beta = 1;
};

/// All diagonals with deg g <= max_deg_g, deg h <= max_deg_h. With
/// apply_cutoff only |g||h| <= q^N/|pi|^2 survive, and at most one
/// diagonal per value of deg h may remain (asserted).
std::vector<Diagonal> enumerate_diagonals(const CharacterFamily& ctx, const Poly& a,
                                          int max_deg_g, int max_deg_h, bool apply_cutoff);

/// The orthogonality constant C_{g,h} = sum over the family of
/// chi(a) chi(h) conj(chi(g)): a rational integer with a four-case closed
/// form (beta = 1 or not, congruence exact mod pi^n or not).
int64_t c_gh_closed(const CharacterFamily& ctx, const Poly& a, const Diagonal& d);
/// The same constant by direct summation over the family.
CycloVec c_gh_direct(const CharacterFamily& ctx, const Poly& a, const Diagonal& d);
/// Searches beta; returns 0 when no scalar makes a = beta g/h mod pi^(n-1).
int64_t c_gh(const CharacterFamily& ctx, const Poly& a, const Poly& g, const Poly& h);

/// Twisted coefficient average, both ways:
///   lhs_scaled = sum_chi chi(a) S_{d1}(chi) conj(S_{d2}(chi))
///   rhs_scaled = sum over diagonals with deg g - deg h = d2 - d1 of
///                C_{g,h} A_{d2 - deg g}
/// (both scaled by q^((d1+d2)/2); equality is exact).
struct MomentCoeffCheck {
    CycloVec lhs_scaled;
    int64_t rhs_scaled = 0;
    bool equal = false;
};
MomentCoeffCheck moment_coeff_dual(const CharacterFamily& ctx, const Poly& a, int d1, int d2);

/// Coefficientwise comparison of the twisted second moment against the
/// multi-diagonal main term with the cutoff, at k = 1.
struct CfkrsK1Report {
    double total_coeff_diff = 0.0;
    double explicit_bound = 0.0;  // two-regime tail estimate
    double sharper_bound = 0.0;   // 10 n |pi|^(n/2)
    bool within_explicit = false;
    bool within_sharper = false;
    int64_t cutoff_diagonals = 0;
    int64_t cutoff_diagonal_cap = 0;  // (n-2) deg pi
};
CfkrsK1Report cfkrs_k1_check(const CharacterFamily& ctx, const Poly& a);

/// Kl_k table over the polynomial quotient with psi = additive character
/// of the T^N coefficient, values in Z[zeta_M]; indexed by element index.
std::vector<CycloVec> poly_kl_table(const CharacterFamily& ctx, int64_t k);

/// The epsilon-moment identity sum_chi chi(a) eps_chi^(p^v) against its
/// Kloosterman-sum expression, tested under four conventions:
///   corrected: constant |G| q^(-p^v(N+2)/2), proof sign psi(-sum lambda),
///              and the primitive-even correction term
///              -(-1)^(p^v)/(q-1) sum_mu Kl(mu/a);
///   printed:   constant 1/|G|, no correction (both signs).
struct EpsilonMomentCheck {
    int64_t pv = 1;
    bool corrected_minus = false;
    bool corrected_plus = false;
    bool printed_minus = false;
    bool printed_plus = false;
    std::string resolved;  // first matching convention, or "none"
};
EpsilonMomentCheck epsilon_moment_check(const CharacterFamily& ctx, const Poly& a, int64_t k);

/// sum_chi chi(a) eps^(p^v), scaled by q^(p^v N / 2) (exact CycloVec).
CycloVec epsilon_moment_direct_scaled(const CharacterFamily& ctx, const Poly& a, int64_t pv);

struct EpsilonLowerBoundReport {
    int64_t pv = 1;
    bool second_moment_exact = false;  // sum_a |.|^2 = |G| |F| q^(p^v N), exact
    int64_t nonvanishing_count = 0;
    int64_t printed_count_bound = 0;     // |pi|^(c+ct-1)(q|pi|-1)(q-1)
    int64_t consistent_count_bound = 0;  // |pi|^(c+ct-1)(|pi|-1)(q-1)
    bool printed_count_ok = false;
    bool consistent_count_ok = false;
    double max_abs = 0.0;      // max_a |sum chi(a) eps^(p^v)|
    double power_target = 0.0; // |pi|^((1 - 1/(p^v+1)) n), the savings scale
};
EpsilonLowerBoundReport epsilon_moment_lower_bound(const CharacterFamily& ctx, int64_t k);

} // namespace wkl
