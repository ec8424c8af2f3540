#pragma once

#include <algorithm>
#include <cstddef>

#if defined(_OPENMP)
#include <omp.h>
#endif

namespace arakelov {

/// Number of worker threads the parallel kernels will use.
inline int max_threads() {
#if defined(_OPENMP)
  return omp_get_max_threads();
#else
  return 1;
#endif
}

/// Calls fun(i) for every i in [0, n). Iterations must be independent.
/// Runs serially when OpenMP is unavailable or n is below `min_parallel`.
template <class Function>
void parallel_for(std::ptrdiff_t n, Function&& fun, std::ptrdiff_t min_parallel = 2) {
#if defined(_OPENMP)
  if (n >= min_parallel && omp_get_max_threads() > 1) {
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t i = 0; i < n; ++i) fun(i);
    return;
  }
#else
  (void)min_parallel;
#endif
  for (std::ptrdiff_t i = 0; i < n; ++i) fun(i);
}

}  // namespace arakelov
