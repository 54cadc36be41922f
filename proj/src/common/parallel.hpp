#pragma once

#include <algorithm>
#include <atomic>
#include <exception>
#include <thread>
#include <vector>

namespace krh {

// Runs fn(0..count-1) on up to `jobs` threads. Every index runs exactly once;
// results must be written to per-index slots. The first exception (lowest
// index) is rethrown after all workers finish.
template <class Fn>
void parallel_for(long count, int jobs, Fn&& fn) {
  if (jobs <= 1 || count <= 1) {
    for (long i = 0; i < count; ++i) fn(i);
    return;
  }
  std::vector<std::exception_ptr> errs(count);
  std::atomic<long> next{0};
  auto work = [&] {
    for (long i; (i = next.fetch_add(1)) < count;) {
      try {
        fn(i);
      } catch (...) {
        errs[i] = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  int t = static_cast<int>(std::min<long>(jobs, count));
  for (int k = 0; k < t; ++k) pool.emplace_back(work);
  for (auto& th : pool) th.join();
  for (auto& e : errs)
    if (e) std::rethrow_exception(e);
}

} // namespace krh
