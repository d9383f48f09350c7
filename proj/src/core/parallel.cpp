#include "core/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <thread>
#include <vector>

namespace polyhardy {

namespace {
std::atomic<int> g_threads{0};
}

void set_worker_threads(int n) { g_threads.store(n < 0 ? 0 : n); }

int worker_threads() {
  int n = g_threads.load();
  if (n == 0) {
    n = static_cast<int>(std::thread::hardware_concurrency());
    if (n <= 0) n = 1;
  }
  return n;
}

void parallel_for(int count, const std::function<void(int)>& fn) {
  const int nthreads = std::min(worker_threads(), count);
  if (nthreads <= 1 || count < 64) {
    for (int i = 0; i < count; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(nthreads);
  for (int t = 0; t < nthreads; ++t) {
    const int lo = static_cast<int>(static_cast<long long>(count) * t / nthreads);
    const int hi = static_cast<int>(static_cast<long long>(count) * (t + 1) / nthreads);
    pool.emplace_back([lo, hi, &fn] {
      for (int i = lo; i < hi; ++i) fn(i);
    });
  }
  for (auto& th : pool) th.join();
}

}  // namespace polyhardy
