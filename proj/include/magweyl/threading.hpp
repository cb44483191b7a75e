#pragma once

#include <functional>
#include <thread>
#include <vector>

namespace magweyl {

// Runs fn(i) for i in [0, count) over contiguous index chunks.  A thread
// count of 1 stays on the caller's thread; results must not depend on the
// chunking (callers write disjoint outputs or reduce per-chunk partials).
inline void parallel_for(long count, int threads,
                         const std::function<void(long)>& fn) {
  if (threads <= 1 || count < 2) {
    for (long i = 0; i < count; ++i) fn(i);
    return;
  }
  const int used = static_cast<int>(std::min<long>(threads, count));
  std::vector<std::thread> pool;
  pool.reserve(used);
  for (int t = 0; t < used; ++t) {
    const long lo = count * t / used, hi = count * (t + 1) / used;
    pool.emplace_back([lo, hi, &fn] {
      for (long i = lo; i < hi; ++i) fn(i);
    });
  }
  for (auto& th : pool) th.join();
}

}  // namespace magweyl
