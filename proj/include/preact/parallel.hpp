#pragma once

#include <cstddef>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace preact::par {

inline int worker_count() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

/// Evaluates f(i) for i in [0, n) and returns the results in index order.
/// Each slot is written exactly once, so the output does not depend on the
/// schedule.
template <class T, class F>
std::vector<T> parallel_map(std::size_t n, F&& f) {
    std::vector<T> out(n);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 16)
#endif
    for (long long i = 0; i < static_cast<long long>(n); ++i)
        out[static_cast<std::size_t>(i)] = f(static_cast<std::size_t>(i));
    return out;
}

}  // namespace preact::par
