#pragma once

#include <atomic>
#include <cstddef>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace orbichow {

/// Runs fn(i) for i in [0, n). Work items must be independent; results
/// must go to disjoint, preallocated slots so any scheduling yields the
/// same output. Falls back to a serial loop for small n.
inline void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn,
                         std::size_t min_parallel = 256) {
  const unsigned hw = std::thread::hardware_concurrency();
  if (n < min_parallel || hw <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  const unsigned nthreads = static_cast<unsigned>(
      std::min<std::size_t>(hw, (n + min_parallel - 1) / min_parallel));
  std::atomic<std::size_t> next{0};
  std::exception_ptr first_error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  pool.reserve(nthreads);
  for (unsigned t = 0; t < nthreads; ++t) {
    pool.emplace_back([&] {
      while (true) {
        const std::size_t i = next.fetch_add(1);
        if (i >= n) break;
        try {
          fn(i);
        } catch (...) {
          std::lock_guard lock(error_mutex);
          if (!first_error) first_error = std::current_exception();
          break;
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  if (first_error) std::rethrow_exception(first_error);
}

}  // namespace orbichow
