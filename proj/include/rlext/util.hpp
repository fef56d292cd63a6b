#pragma once

#include <atomic>
#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace rlext {

// Visits all t-element subsets of {0, ..., n-1} in lexicographic order.
// fn receives the index vector and returns false to stop the scan early;
// the return value is false iff the scan was stopped.
template <typename Fn>
bool for_each_combination(int n, int t, Fn&& fn) {
  if (t < 0 || t > n) return true;
  std::vector<int> idx(t);
  for (int i = 0; i < t; ++i) idx[i] = i;
  while (true) {
    if (!fn(static_cast<const std::vector<int>&>(idx))) return false;
    int i = t - 1;
    while (i >= 0 && idx[i] == n - t + i) --i;
    if (i < 0) return true;
    ++idx[i];
    for (int j = i + 1; j < t; ++j) idx[j] = idx[j - 1] + 1;
  }
}

// Runs fn(i) for every i in [0, count) on at most `jobs` worker threads.
// Work items are independent; the first exception thrown is rethrown in
// the calling thread after all workers finish.
template <typename Fn>
void parallel_for_index(std::int64_t count, int jobs, Fn&& fn) {
  if (count <= 0) return;
  if (jobs < 1) jobs = 1;
  const int workers = static_cast<int>(std::min<std::int64_t>(jobs, count));
  if (workers == 1) {
    for (std::int64_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::int64_t> next{0};
  std::exception_ptr first_error;
  std::mutex err_mu;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      while (true) {
        const std::int64_t i = next.fetch_add(1, std::memory_order_relaxed);
        if (i >= count) return;
        try {
          fn(i);
        } catch (...) {
          std::lock_guard<std::mutex> lk(err_mu);
          if (!first_error) first_error = std::current_exception();
          return;
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (first_error) std::rethrow_exception(first_error);
}

}  // namespace rlext
