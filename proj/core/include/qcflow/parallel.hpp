// Deterministic work distribution.  The QCFLOW_THREADS environment variable
// caps the worker count; results are identical for any worker count because
// each index writes only its own output slot.
#pragma once

#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace qcflow {

inline std::size_t thread_budget() {
  std::size_t budget = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("QCFLOW_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 1) budget = static_cast<std::size_t>(v);
  }
  return budget;
}

// Runs fn(i) for i in [0, count) across the thread budget with a static
// stride schedule.  fn must only write to state owned by index i.
template <class F>
inline void parallel_for(std::size_t count, F&& fn) {
  const std::size_t workers = std::min(thread_budget(), count == 0 ? 1 : count);
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::mutex error_mutex;
  std::exception_ptr first_error;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w]() {
      try {
        for (std::size_t i = w; i < count; i += workers) fn(i);
      } catch (...) {
        const std::lock_guard<std::mutex> lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  if (first_error) std::rethrow_exception(first_error);
}

}  // namespace qcflow
