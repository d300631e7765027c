#pragma once

#include <string>
#include <vector>

#include "wkl/intervals.hpp"
#include "wkl/ring.hpp"

namespace wkl {

/// The default verification grid: rings of all three kinds small enough
/// for exhaustive sweeps.
std::vector<RingSpec> default_grid();

std::vector<int64_t> default_k_list();  // {1, 2, 3, 4, 6}

/// (spec, k) pairs are skipped when the naive tuple count q^(n(k-1))
/// exceeds the budget.
bool within_budget(const RingSpec& spec, int64_t k, int64_t budget);

std::vector<IntervalConfig> default_interval_configs();

struct MomentConfigDesc {
    int64_t p = 3;
    int f = 1;
    std::string pi = "T";
    int n = 2;
    int64_t k = 1;
};

std::vector<MomentConfigDesc> default_moment_configs();

} // namespace wkl
