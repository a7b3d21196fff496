#pragma once

#include <cstddef>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace cobar {

// Verification sweeps run either serially (reference) or via OpenMP.
// Callers write results into per-index slots and merge in index order, so the
// outcome is byte-identical across modes and thread counts.
enum class ExecMode { Serial, Parallel };

template <class F>
void for_each_slot(std::size_t n, ExecMode mode, F&& body) {
#ifdef _OPENMP
  if (mode == ExecMode::Parallel) {
#pragma omp parallel for schedule(dynamic, 8)
    for (long long i = 0; i < static_cast<long long>(n); ++i)
      body(static_cast<std::size_t>(i));
    return;
  }
#endif
  (void)mode;
  for (std::size_t i = 0; i < n; ++i) body(i);
}

inline int worker_count(ExecMode mode) {
#ifdef _OPENMP
  if (mode == ExecMode::Parallel) return omp_get_max_threads();
#endif
  (void)mode;
  return 1;
}

}  // namespace cobar
