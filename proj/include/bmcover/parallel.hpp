#pragma once

#include <cstddef>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace bmcover {

/// Sweep width used by the OpenMP loops. 0 keeps the OpenMP runtime default.
void set_sweep_jobs(int jobs);
int sweep_jobs();

/// Serial reference loop. The parallel kernels are checked against code paths
/// built on this one, so keep it dead simple.
template <class F>
void serial_for(std::size_t n, F&& fn) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
}

/// OpenMP loop over [0, n). Each iteration must be independent; callers store
/// results by index so the output is identical for any thread count.
template <class F>
void parallel_for(std::size_t n, F&& fn) {
#ifdef _OPENMP
    const int jobs = sweep_jobs();
    if (n > 1 && jobs != 1) {
#pragma omp parallel for schedule(dynamic) num_threads(jobs > 0 ? jobs : omp_get_max_threads())
        for (long long i = 0; i < static_cast<long long>(n); ++i)
            fn(static_cast<std::size_t>(i));
        return;
    }
#endif
    serial_for(n, fn);
}

} // namespace bmcover
