#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

namespace chtri {

/// Worker count: CHG_THREADS if set to a positive integer, otherwise the
/// hardware concurrency (at least one).
inline unsigned thread_count() {
  if (const char* env = std::getenv("CHG_THREADS")) {
    try {
      const long v = std::stol(env);
      if (v > 0) return static_cast<unsigned>(v);
    } catch (...) {
    }
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

/// Calls body(begin, end) on contiguous chunks of [0, n). Chunks are fixed by
/// n and the worker count, so results written by index are deterministic.
template <class Body>
void parallel_chunks(std::size_t n, Body&& body) {
  const std::size_t workers = std::min<std::size_t>(thread_count(), std::max<std::size_t>(1, n));
  if (workers <= 1) {
    body(std::size_t{0}, n);
    return;
  }
  const std::size_t chunk = (n + workers - 1) / workers;
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    const std::size_t begin = w * chunk;
    const std::size_t end = std::min(n, begin + chunk);
    if (begin >= end) break;
    pool.emplace_back([&body, begin, end] { body(begin, end); });
  }
}

}  // namespace chtri
