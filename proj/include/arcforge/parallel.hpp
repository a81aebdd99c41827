#pragma once

#include <algorithm>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <utility>
#include <vector>

namespace arcforge {

// --threads flag wins, then ARCFORGE_THREADS, then the hardware count
inline int resolve_threads(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("ARCFORGE_THREADS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end && *end == '\0' && v > 0) return static_cast<int>(v);
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw ? static_cast<int>(hw) : 1;
}

// Runs f(i) for i in [0,n). Work is split by index ranges, so anything f
// writes at slot i lands in the same place no matter how many threads run.
template <class F>
void parallel_for(long long n, int threads, F&& f) {
  if (n <= 0) return;
  threads = static_cast<int>(std::max<long long>(1, std::min<long long>(threads, n)));
  if (threads == 1) {
    for (long long i = 0; i < n; ++i) f(i);
    return;
  }
  std::vector<std::thread> pool;
  std::mutex err_mx;
  std::exception_ptr err;
  for (int t = 0; t < threads; ++t) {
    long long lo = n * t / threads, hi = n * (t + 1) / threads;
    pool.emplace_back([&, lo, hi] {
      try {
        for (long long i = lo; i < hi; ++i) f(i);
      } catch (...) {
        std::lock_guard<std::mutex> lk(err_mx);
        if (!err) err = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  if (err) std::rethrow_exception(err);
}

}  // namespace arcforge
