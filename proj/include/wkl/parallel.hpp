#pragma once

#include <cstdint>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace wkl {

inline int effective_workers(int requested) {
#ifdef _OPENMP
    if (requested > 0) return requested;
    return omp_get_max_threads();
#else
    (void)requested;
    return 1;
#endif
}

/// Index-sliced parallel loop over [0, count). Slots must be independent;
/// all kernels here do exact integer work, so output bytes do not depend
/// on the schedule or the worker count.
template <class Fn>
void parallel_for(int64_t count, int workers, Fn&& fn) {
#ifdef _OPENMP
    const int w = effective_workers(workers);
#pragma omp parallel for schedule(dynamic, 16) num_threads(w)
    for (int64_t i = 0; i < count; ++i) fn(i);
#else
    (void)workers;
    for (int64_t i = 0; i < count; ++i) fn(i);
#endif
}

inline int thread_index() {
#ifdef _OPENMP
    return omp_get_thread_num();
#else
    return 0;
#endif
}

} // namespace wkl
