#pragma once

#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace waudit {

inline int default_threads() {
  const auto n = std::thread::hardware_concurrency();
  return n == 0 ? 1 : static_cast<int>(n);
}

// Static contiguous partition of [0, n) over at most `threads` workers.
// Each index is visited exactly once; callers write to disjoint output
// slots, so results are identical for every thread count.
template <class F>
void parallel_for(std::size_t n, int threads, F&& fn) {
  if (threads < 1) threads = 1;
  if (threads == 1 || n < 2) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  const auto nt = static_cast<std::size_t>(threads) < n ? static_cast<std::size_t>(threads) : n;
  std::vector<std::thread> pool;
  pool.reserve(nt);
  std::exception_ptr first_error;
  std::mutex error_mu;
  for (std::size_t t = 0; t < nt; ++t) {
    const std::size_t lo = n * t / nt;
    const std::size_t hi = n * (t + 1) / nt;
    pool.emplace_back([&, lo, hi] {
      try {
        for (std::size_t i = lo; i < hi; ++i) fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mu);
        if (!first_error) first_error = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  if (first_error) std::rethrow_exception(first_error);
}

}  // namespace waudit
