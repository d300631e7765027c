#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "wkl/cyclo.hpp"
#include "wkl/params.hpp"
#include "wkl/ring.hpp"

namespace wkl {

/// Hyper-Kloosterman values Kl_k(x) for every x in R/pi^n, indexed by
/// element index. Kl_k(x) = sum over k-tuples with product x of
/// psi(sum of coordinates).
struct KlTable {
    int64_t k = 1;
    std::vector<CycloVec> values;

    const CycloVec& at(const RingSpec& spec, const RingElt& x) const {
        return values[spec.index_of(x)];
    }
};

/// Full table by iterated multiplicative convolution. The budget is the
/// naive tuple count q^(n(k-1)); exceeding it throws BudgetExceeded.
/// OpenMP-parallel; byte-identical for any worker count.
KlTable kl_brute_table(const RingSpec& spec, const AdditiveCharacter& psi, int64_t k,
                       int64_t budget = RingSpec::kDefaultEnumBudget, int workers = 0);

/// Serial reference for the same table, kept for testing and benchmarks.
KlTable kl_brute_table_serial(const RingSpec& spec, const AdditiveCharacter& psi, int64_t k,
                              int64_t budget = RingSpec::kDefaultEnumBudget);

/// Single value by direct enumeration of (k-1)-tuples. Independent of the
/// convolution path; used as a cross-check oracle.
CycloVec kl_brute_tuples(const RingSpec& spec, const AdditiveCharacter& psi, int64_t k,
                         const RingElt& x, int64_t budget = RingSpec::kDefaultEnumBudget);

/// Membership witness for the critical set: pairs (a, x), a a unit, with
/// psi(y(k-1) + x/(a+y)^(k-1) - x/a^(k-1)) = 1 for all y in pi^level R.
struct CriticalWitness {
    RingElt a, x;
    bool member = false;
    std::optional<RingElt> failing_y;  // a y breaking the identity, when not a member
};

/// level selects the ideal pi^level R quantified over (c for the critical
/// set itself, c_tilde for the finer class analysis). With use_generators
/// the test runs only on additive generators of pi^level R — valid at
/// level c, where the phase increment is a homomorphism; at other levels
/// callers must pass false to force full enumeration.
CriticalWitness critical_set_member(const RingSpec& spec, const AdditiveCharacter& psi,
                                    int64_t k, const RingElt& a, const RingElt& x, int level,
                                    bool use_generators);

/// Stationary-phase evaluation of Kl_k(x) for unit x, n >= 2. Sums over
/// unit classes a mod pi^c that satisfy both the critical-set condition
/// and the first-phase congruence a^k = x mod pi^ceil(n/2) (even n) or
/// mod pi^((n-1)/2) (odd n, with the quadratic Gauss factor G_k).
/// The congruence is implied by membership whenever p does not divide
/// k-1, but must be imposed separately in the degenerate case.
CycloVec kl_stationary(const RingSpec& spec, const AdditiveCharacter& psi, int64_t k,
                       const RingElt& x);

/// Exact Gauss sum G_k(alpha, beta) over (R/pi)^(k-1):
///   sum psi(pi^(n-1) (alpha sum delta_i + beta sum_{i<=j} delta_i delta_j)).
/// alpha, beta are residue-field codes.
CycloVec gauss_gk_brute(const RingSpec& spec, const AdditiveCharacter& psi, int64_t k,
                        int64_t alpha, int64_t beta);

struct GaussMagnitude {
    double value = 0.0;
    bool vanishes = false;
};

/// Closed-form |G_k(alpha, beta)| for beta != 0, split by the three cases
/// p∤k; p|k with p odd or 4|k; p=2 with k = 2 mod 4 (using the element
/// lambda with psi(pi^(n-1) x^2) = psi(pi^(n-1) lambda x)).
GaussMagnitude gauss_gk_magnitude(const RingSpec& spec, const AdditiveCharacter& psi, int64_t k,
                                  int64_t alpha, int64_t beta);

/// The unique lambda in R/pi with psi(pi^(n-1) x^2) = psi(pi^(n-1) lambda x)
/// for all x; exists for p = 2.
int64_t find_psi_lambda(const RingSpec& spec, const AdditiveCharacter& psi);

struct GenericGaussResult {
    double direct = 0.0;     // |sum_v phi(v)| by enumeration
    double predicted = 0.0;  // sqrt(|V| |W|) or 0 per the kernel test
    int64_t kernel_size = 1;
    bool constant_on_kernel = false;
};

/// |sum_{v in V} phi(v)| for a unit-modulus phase phi on V = F_q^dim given
/// by exponents into mu_M. Requires w -> phi(v+w)conj(phi v)conj(phi w)phi(0)
/// to be a homomorphism for each v (checked; throws if violated).
GenericGaussResult generic_gauss(const Fq& field, int dim, int64_t M,
                                 const std::vector<int64_t>& phase_exponents);

/// Sweep of kl_stationary over every unit, indexed by element index
/// (non-units hold exact zeros). OpenMP-parallel with a serial reference.
std::vector<CycloVec> kl_stationary_sweep(const RingSpec& spec, const AdditiveCharacter& psi,
                                          int64_t k, int workers = 0);
std::vector<CycloVec> kl_stationary_sweep_serial(const RingSpec& spec,
                                                 const AdditiveCharacter& psi, int64_t k);

} // namespace wkl
