#pragma once

#include <cstddef>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace covercount::par {

// Execution mode for the data-parallel kernels. Serial is the reference path;
// OpenMP must produce bit-identical results (each index writes only its own
// slot, no shared reductions).
enum class ExecMode { Serial, OpenMP };

// Resolves COVERCOUNT_THREADS: unset/0 -> OpenMP with default threads,
// 1 -> Serial, k>1 -> OpenMP capped at k threads.
ExecMode default_mode();

// Thread cap implied by COVERCOUNT_THREADS (0 = no cap).
int thread_cap();

int max_threads();

template <class F>
void parallel_for(std::size_t n, ExecMode mode, F&& body) {
  if (mode == ExecMode::Serial) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
#ifdef _OPENMP
  const int cap = thread_cap();
  const long long nn = static_cast<long long>(n);
#pragma omp parallel for schedule(dynamic) num_threads(cap > 0 ? cap : omp_get_max_threads())
  for (long long i = 0; i < nn; ++i) body(static_cast<std::size_t>(i));
#else
  for (std::size_t i = 0; i < n; ++i) body(i);
#endif
}

} // namespace covercount::par
