#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace arithlab {

/// Worker count: explicit value if nonzero, else ARITHLAB_THREADS, else 1.
inline unsigned resolve_threads(unsigned requested = 0) {
  if (requested > 0) return requested;
  if (const char *env = std::getenv("ARITHLAB_THREADS")) {
    try {
      int v = std::stoi(env);
      if (v > 0) return static_cast<unsigned>(v);
    } catch (const std::exception &) {
    }
  }
  return 1;
}

/// Runs task(i) for every i in [0, count). Tasks are independent; callers
/// write into per-index slots so the merged result is order-independent.
template <typename Task> void parallel_for(std::size_t count, unsigned threads, Task &&task) {
  threads = std::max(1u, threads);
  if (threads == 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) task(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= count) return;
      try {
        task(i);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  const auto spawn = std::min<std::size_t>(threads, count);
  for (std::size_t t = 0; t < spawn; ++t) pool.emplace_back(worker);
  for (auto &th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
}

} // namespace arithlab
