#pragma once

#include <cstddef>
#include <cstdlib>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace elicit {

enum class Exec { Serial, Parallel };

// Global thread cap: 0 means "library default" (all hardware threads under
// OpenMP). Set from the CLI --threads flag or the ELICIT_THREADS variable.
int thread_cap();
void set_thread_cap(int n);

// Parallel kernels write one slot per index and never reduce across
// iterations, so results are identical for any thread count.
template <typename Body>
void parallel_for(std::size_t n, const Body& body) {
#ifdef _OPENMP
  const int cap = thread_cap();
  const int threads = cap > 0 ? cap : omp_get_max_threads();
#pragma omp parallel for schedule(static) num_threads(threads)
  for (long long i = 0; i < static_cast<long long>(n); ++i) {
    body(static_cast<std::size_t>(i));
  }
#else
  for (std::size_t i = 0; i < n; ++i) body(i);
#endif
}

// Serial reference loop kept alongside the OpenMP kernels; tests assert the
// two produce bitwise-equal results and the bench tool compares timings.
template <typename Body>
void serial_for(std::size_t n, const Body& body) {
  for (std::size_t i = 0; i < n; ++i) body(i);
}

template <typename Body>
void run_for(Exec exec, std::size_t n, const Body& body) {
  if (exec == Exec::Parallel) {
    parallel_for(n, body);
  } else {
    serial_for(n, body);
  }
}

}  // namespace elicit
