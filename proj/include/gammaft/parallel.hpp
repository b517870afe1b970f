#pragma once

#include <cstddef>

#if defined(_OPENMP)
#include <omp.h>
#endif

#include <cstdlib>
#include <string>

namespace gammaft::par {

// Worker count for parallel sweeps: GAMMAFT_THREADS if set, else the OpenMP
// default (logical cores), else 1.
inline int worker_count() {
  if (const char* env = std::getenv("GAMMAFT_THREADS")) {
    const int n = std::atoi(env);
    if (n > 0) return n;
  }
#if defined(_OPENMP)
  return omp_get_max_threads();
#else
  return 1;
#endif
}

// Index-parallel loop. Each body(i) writes only to slot i of preallocated
// storage, so results are bitwise identical to the serial path regardless of
// schedule. `parallel = false` is the serial reference used in tests and the
// benchmark.
template <class Body>
void parallel_for(std::size_t n, Body&& body, bool parallel = true) {
#if defined(_OPENMP)
  if (parallel && n > 1 && worker_count() > 1) {
    const int nthreads = worker_count();
#pragma omp parallel for schedule(dynamic) num_threads(nthreads)
    for (long long i = 0; i < static_cast<long long>(n); ++i)
      body(static_cast<std::size_t>(i));
    return;
  }
#else
  (void)parallel;
#endif
  for (std::size_t i = 0; i < n; ++i) body(i);
}

}  // namespace gammaft::par
