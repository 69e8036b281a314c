#ifndef LAGRHD_PARALLEL_HPP
#define LAGRHD_PARALLEL_HPP

#include <exception>

namespace lagrhd {

// Static-schedule parallel loop with per-index writes only, so results do not
// depend on the thread count. Exceptions are rethrown after the region.
template <class F>
void parallel_for(int n, F&& fn) {
  std::exception_ptr err = nullptr;
#pragma omp parallel for schedule(static)
  for (int k = 0; k < n; ++k) {
    if (err) continue;
    try {
      fn(k);
    } catch (...) {
#pragma omp critical
      if (!err) err = std::current_exception();
    }
  }
  if (err) std::rethrow_exception(err);
}

} // namespace lagrhd

#endif
