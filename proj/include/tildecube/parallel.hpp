#pragma once

#include <atomic>
#include <cstdlib>
#include <thread>
#include <vector>

namespace tildecube {

namespace detail {

inline std::atomic<int>& worker_override() {
  static std::atomic<int> value{0};
  return value;
}

}  // namespace detail

/// Number of workers used by parallelizable checks. Resolution order:
/// set_worker_count() override, then the TILDECUBE_THREADS environment
/// variable, then hardware concurrency. Results never depend on the worker
/// count; only wall time does.
inline int worker_count() {
  const int forced = detail::worker_override().load(std::memory_order_relaxed);
  if (forced > 0) return forced;
  if (const char* env = std::getenv("TILDECUBE_THREADS")) {
    const int n = std::atoi(env);
    if (n > 0) return n;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

/// Overrides worker_count(); pass 0 to restore automatic selection.
inline void set_worker_count(int n) {
  detail::worker_override().store(n < 0 ? 0 : n, std::memory_order_relaxed);
}

namespace detail {

/// Runs fn(worker_id) on `count` threads and joins. count <= 1 runs inline.
template <typename Fn>
void run_on_workers(int count, Fn&& fn) {
  if (count <= 1) {
    fn(0);
    return;
  }
  std::vector<std::thread> threads;
  threads.reserve(static_cast<std::size_t>(count));
  for (int id = 0; id < count; ++id) threads.emplace_back([&fn, id] { fn(id); });
  for (auto& t : threads) t.join();
}

}  // namespace detail

}  // namespace tildecube
