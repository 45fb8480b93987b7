#pragma once

// Index-parallel map used by every scan. The serial version is the
// reference; the OpenMP version must produce identical output because each
// slot is written by exactly one iteration and results are merged in index
// order by the caller.

#include <cstddef>
#include <exception>
#include <type_traits>
#include <utility>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace lacolor::kernels {

struct Policy {
  bool parallel = true;
  int threads = 0;  // 0: OpenMP default
};

inline bool openmp_enabled() {
#ifdef _OPENMP
  return true;
#else
  return false;
#endif
}

namespace serial {

template <class Fn>
auto map_indices(std::size_t n, Fn&& fn) {
  using R = std::decay_t<decltype(fn(std::size_t{}))>;
  std::vector<R> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(fn(i));
  return out;
}

}  // namespace serial

namespace parallel {

template <class Fn>
auto map_indices(std::size_t n, Fn&& fn, int threads = 0) {
  using R = std::decay_t<decltype(fn(std::size_t{}))>;
  static_assert(!std::is_same_v<R, bool>, "vector<bool> slots are not independently writable");
  std::vector<R> out(n);
  // Lowest failing index wins so that errors are reproducible too.
  std::vector<std::exception_ptr> errors(n);
  const auto count = static_cast<std::ptrdiff_t>(n);
#ifdef _OPENMP
  const int nt = threads > 0 ? threads : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 16) num_threads(nt)
#endif
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    try {
      out[static_cast<std::size_t>(i)] = fn(static_cast<std::size_t>(i));
    } catch (...) {
      errors[static_cast<std::size_t>(i)] = std::current_exception();
    }
  }
  (void)threads;
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return out;
}

}  // namespace parallel

template <class Fn>
auto map_indices(const Policy& policy, std::size_t n, Fn&& fn) {
  if (policy.parallel) return parallel::map_indices(n, std::forward<Fn>(fn), policy.threads);
  return serial::map_indices(n, std::forward<Fn>(fn));
}

}  // namespace lacolor::kernels
