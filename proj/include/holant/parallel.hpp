#pragma once

#include <cstddef>
#include <numeric>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace holant {

// Execution policy for the data-parallel kernels. Every kernel has a serial
// reference path; the parallel path must produce results that are independent
// of the thread count (per-chunk accumulation, fixed reduction order).
enum class Exec { Serial, Par };

inline int hardware_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

inline void set_thread_count(int n) {
#ifdef _OPENMP
  if (n > 0) omp_set_num_threads(n);
#else
  (void)n;
#endif
}

// body(i) for i in [0, n); iterations must be independent.
template <class Body>
void parallel_for(std::size_t n, Exec exec, Body&& body) {
  if (exec == Exec::Par) {
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(n); ++i) {
      body(static_cast<std::size_t>(i));
    }
    return;
#endif
  }
  for (std::size_t i = 0; i < n; ++i) body(i);
}

// Sum of body(i) over [0, n). The parallel path accumulates fixed-size chunks
// and reduces them in index order, so the result does not depend on the number
// of threads (it differs from the serial path only by the chunked rounding).
template <class Body>
double chunked_sum(std::size_t n, Exec exec, Body&& body, std::size_t chunk = 4096) {
  if (exec == Exec::Serial || n <= chunk) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += body(i);
    return s;
  }
  const std::size_t nchunks = (n + chunk - 1) / chunk;
  std::vector<double> partial(nchunks, 0.0);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
  for (std::ptrdiff_t c = 0; c < static_cast<std::ptrdiff_t>(nchunks); ++c) {
    const std::size_t lo = static_cast<std::size_t>(c) * chunk;
    const std::size_t hi = std::min(n, lo + chunk);
    double s = 0.0;
    for (std::size_t i = lo; i < hi; ++i) s += body(i);
    partial[static_cast<std::size_t>(c)] = s;
  }
  return std::accumulate(partial.begin(), partial.end(), 0.0);
}

}  // namespace holant
