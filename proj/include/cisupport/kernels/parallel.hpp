#pragma once

#include <exception>
#include <mutex>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace cisupport::kernels {

/// Run body(i) for i in [0, n). Iterations must be independent; results are
/// written by index, so the outcome does not depend on scheduling. The first
/// exception thrown by any iteration is rethrown after the loop.
template <class Body>
void parallel_for(int n, Body&& body, bool parallel = true) {
  if (!parallel || n < 2) {
    for (int i = 0; i < n; ++i) body(i);
    return;
  }
  std::exception_ptr error;
  std::mutex mu;
#pragma omp parallel for schedule(dynamic, 1)
  for (int i = 0; i < n; ++i) {
    try {
      body(i);
    } catch (...) {
      std::lock_guard<std::mutex> lock(mu);
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
}

/// out[i] = f(i), evaluated with parallel_for.
template <class T, class F>
std::vector<T> parallel_map(int n, F&& f, bool parallel = true) {
  std::vector<T> out(static_cast<std::size_t>(n));
  parallel_for(n, [&](int i) { out[i] = f(i); }, parallel);
  return out;
}

inline int thread_count() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace cisupport::kernels
