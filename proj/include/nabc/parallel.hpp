#pragma once

#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace nabc {

/// Runs fn(i) for every i in [0, count) on up to `jobs` threads. Work items are
/// handed out dynamically; callers write results into per-index slots, so the
/// outcome never depends on scheduling. The exception from the lowest failing
/// index is rethrown.
template <class Fn>
void parallel_for(int jobs, std::size_t count, Fn&& fn) {
  if (jobs <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::mutex err_mu;
  std::exception_ptr err;
  std::size_t err_index = count;
  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= count) return;
      try {
        fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(err_mu);
        if (i < err_index) {
          err_index = i;
          err = std::current_exception();
        }
      }
    }
  };
  const std::size_t n = std::min<std::size_t>(static_cast<std::size_t>(jobs), count);
  std::vector<std::thread> threads;
  threads.reserve(n);
  for (std::size_t t = 0; t < n; ++t) threads.emplace_back(worker);
  for (auto& t : threads) t.join();
  if (err) std::rethrow_exception(err);
}

}  // namespace nabc
