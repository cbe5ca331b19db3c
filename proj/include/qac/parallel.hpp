#pragma once

#include <algorithm>
#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace qac {

// Runs fn(i) for i in [0, n) on up to `workers` threads. Each index is
// handled exactly once; callers write results into index-addressed slots and
// reduce sequentially afterwards, so output never depends on scheduling.
template <class Fn>
void parallel_for(std::uint64_t n, int workers, Fn&& fn) {
  const auto threads = static_cast<std::uint64_t>(std::max(1, workers));
  if (threads == 1 || n < 2) {
    for (std::uint64_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::jthread> pool;
  const std::uint64_t used = std::min(threads, n);
  pool.reserve(used);
  for (std::uint64_t w = 0; w < used; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (std::uint64_t i = w; i < n; i += used) fn(i);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    });
  }
  pool.clear();
  if (error) std::rethrow_exception(error);
}

}  // namespace qac
