#include "covercount/parallel.hpp"

#include <cstdlib>
#include <string>

namespace covercount::par {

static int parse_thread_env() {
  const char* v = std::getenv("COVERCOUNT_THREADS");
  if (!v || !*v) return 0;
  try {
    const int k = std::stoi(v);
    return k < 0 ? 0 : k;
  } catch (...) {
    return 0;
  }
}

ExecMode default_mode() {
#ifdef _OPENMP
  return parse_thread_env() == 1 ? ExecMode::Serial : ExecMode::OpenMP;
#else
  return ExecMode::Serial;
#endif
}

int thread_cap() { return parse_thread_env(); }

int max_threads() {
#ifdef _OPENMP
  const int cap = thread_cap();
  const int hw = omp_get_max_threads();
  return (cap > 0 && cap < hw) ? cap : hw;
#else
  return 1;
#endif
}

} // namespace covercount::par
