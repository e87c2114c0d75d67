#pragma once

#include <functional>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace jackchar {

// 0 means "let the runtime pick"; 1 forces the serial path.
inline int& job_count() {
  static int jobs = 0;
  return jobs;
}

inline void set_job_count(int jobs) { job_count() = jobs < 0 ? 0 : jobs; }

inline constexpr bool built_with_openmp() {
#ifdef _OPENMP
  return true;
#else
  return false;
#endif
}

// Runs fn on every index in [0, count). fn must be safe to run concurrently
// on distinct indices; iteration order is unspecified on the parallel path.
inline void parallel_for(int count, const std::function<void(int)>& fn) {
#ifdef _OPENMP
  if (job_count() != 1 && count > 1) {
    int threads = job_count() > 0 ? job_count() : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(threads)
    for (int i = 0; i < count; ++i) fn(i);
    return;
  }
#endif
  for (int i = 0; i < count; ++i) fn(i);
}

// Serial twin with guaranteed ascending order, kept as the reference path.
inline void serial_for(int count, const std::function<void(int)>& fn) {
  for (int i = 0; i < count; ++i) fn(i);
}

}  // namespace jackchar
