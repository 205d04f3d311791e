#pragma once

#include <thread>
#include <vector>

namespace vexwave {

/// Run f(i) for i in [begin,end). threads <= 1 means serial.
template <class F>
void parallel_for(int begin, int end, int threads, F&& f) {
  const int n = end - begin;
  if (threads <= 1 || n < 2 * threads) {
    for (int i = begin; i < end; ++i) f(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(threads);
  const int chunk = (n + threads - 1) / threads;
  for (int t = 0; t < threads; ++t) {
    const int lo = begin + t * chunk;
    const int hi = std::min(end, lo + chunk);
    if (lo >= hi) break;
    pool.emplace_back([lo, hi, &f] {
      for (int i = lo; i < hi; ++i) f(i);
    });
  }
  for (auto& th : pool) th.join();
}

}  // namespace vexwave
