#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace ratios {

/// Runs fn(i) for i in [0, count) on up to `workers` threads. Tasks are
/// independent; an exception from the lowest failing index is rethrown.
template <class Fn>
void parallel_for(std::size_t count, unsigned workers, Fn&& fn) {
  workers = std::max(1u, workers);
  std::atomic<std::size_t> next{0};
  std::mutex err_mutex;
  std::exception_ptr first_err;
  std::size_t first_idx = count;
  auto run = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(err_mutex);
        if (i < first_idx) {
          first_idx = i;
          first_err = std::current_exception();
        }
      }
    }
  };
  if (workers == 1 || count <= 1) {
    run();
  } else {
    std::vector<std::thread> pool;
    unsigned n = std::min<std::size_t>(workers, count);
    pool.reserve(n);
    for (unsigned t = 0; t < n; ++t) pool.emplace_back(run);
    for (auto& th : pool) th.join();
  }
  if (first_err) std::rethrow_exception(first_err);
}

}  // namespace ratios
