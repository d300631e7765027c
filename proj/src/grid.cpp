#include "wkl/grid.hpp"

namespace wkl {

std::vector<RingSpec> default_grid() {
    return {
        RingSpec::make(RingKind::Unramified, 3, 1, 1, 2),   // Z/9
        RingSpec::make(RingKind::Unramified, 3, 1, 1, 3),   // Z/27
        RingSpec::make(RingKind::Unramified, 2, 1, 1, 4),   // Z/16
        RingSpec::make(RingKind::Unramified, 3, 2, 1, 2),   // GR(9,2)
        RingSpec::make(RingKind::Eisenstein, 2, 1, 2, 3),   // (Z/4)[x]/(x^2-2, x^3)
        RingSpec::make(RingKind::Eisenstein, 2, 1, 2, 4),
        RingSpec::make(RingKind::Eisenstein, 2, 1, 2, 5),
        RingSpec::make(RingKind::Eisenstein, 3, 1, 2, 3),
        RingSpec::make(RingKind::EqualChar, 2, 1, 0, 2),    // F_2[t]/t^n, n = 2..6
        RingSpec::make(RingKind::EqualChar, 2, 1, 0, 3),
        RingSpec::make(RingKind::EqualChar, 2, 1, 0, 4),
        RingSpec::make(RingKind::EqualChar, 2, 1, 0, 5),
        RingSpec::make(RingKind::EqualChar, 2, 1, 0, 6),
        RingSpec::make(RingKind::EqualChar, 3, 1, 0, 2),    // F_3[t]/t^n, n = 2..4
        RingSpec::make(RingKind::EqualChar, 3, 1, 0, 3),
        RingSpec::make(RingKind::EqualChar, 3, 1, 0, 4),
        RingSpec::make(RingKind::EqualChar, 2, 2, 0, 3),    // F_4[t]/t^3
    };
}

std::vector<int64_t> default_k_list() { return {1, 2, 3, 4, 6}; }

bool within_budget(const RingSpec& spec, int64_t k, int64_t budget) {
    long double cost = 1.0L;
    for (int64_t i = 0; i < k - 1; ++i) cost *= static_cast<long double>(spec.size());
    return cost <= static_cast<long double>(budget);
}

std::vector<IntervalConfig> default_interval_configs() {
    return {
        {2, 1, 2, 4}, {2, 1, 2, 5}, {3, 1, 2, 3}, {3, 1, 2, 4}, {2, 1, 4, 3}, {3, 1, 3, 3},
    };
}

std::vector<MomentConfigDesc> default_moment_configs() {
    return {
        {3, 1, "T", 2, 3},
        {3, 1, "T", 3, 3},
        {2, 2, "T", 2, 2},          // q = 4
        {3, 1, "T", 2, 1},
        {2, 1, "T^2+T+1", 2, 1},    // empty family short-circuit
    };
}

} // namespace wkl
