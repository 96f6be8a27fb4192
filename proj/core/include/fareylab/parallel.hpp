#ifndef FAREYLAB_PARALLEL_HPP
#define FAREYLAB_PARALLEL_HPP

#include <cstdint>
#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace fareylab {

/// Runs fn(i) for i in [0, n) on `workers` threads. Callers preallocate
/// result slots by index, so output is deterministic regardless of
/// scheduling or worker count.
inline void parallel_for(std::int64_t n, int workers,
                         const std::function<void(std::int64_t)>& fn) {
  if (workers <= 1 || n <= 1) {
    for (std::int64_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::vector<std::thread> threads;
  threads.reserve(static_cast<std::size_t>(workers));
  for (int w = 0; w < workers; ++w) {
    threads.emplace_back([&fn, n, w, workers] {
      for (std::int64_t i = w; i < n; i += workers) fn(i);
    });
  }
  for (auto& t : threads) t.join();
}

inline int default_workers() {
  if (const char* env = std::getenv("FAREY_LAB_WORKERS")) {
    const int n = std::atoi(env);
    if (n >= 1) return n;
  }
  return 1;
}

}  // namespace fareylab

#endif
