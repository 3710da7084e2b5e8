#ifndef FCONE_PARALLEL_HPP
#define FCONE_PARALLEL_HPP

#include <cstddef>

#if defined(_OPENMP)
#include <omp.h>
#endif

namespace fcone {

// Data-parallel loop over [0, n). The hot kernels call this with
// use_threads=true; the serial reference implementations pass false so
// tests can compare both paths on identical code.
template <class F>
void parallel_for(std::size_t n, bool use_threads, F&& body) {
#if defined(_OPENMP)
    if (use_threads) {
#pragma omp parallel for schedule(dynamic, 16)
        for (long long i = 0; i < static_cast<long long>(n); ++i)
            body(static_cast<std::size_t>(i));
        return;
    }
#else
    (void)use_threads;
#endif
    for (std::size_t i = 0; i < n; ++i) body(i);
}

inline int hardware_threads() {
#if defined(_OPENMP)
    return omp_get_max_threads();
#else
    return 1;
#endif
}

} // namespace fcone

#endif
