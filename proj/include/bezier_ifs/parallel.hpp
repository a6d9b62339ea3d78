#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace bezier_ifs {

inline unsigned default_threads() { return std::max(1U, std::thread::hardware_concurrency()); }

/// Calls f(begin, end) on contiguous chunks of [0, n). Chunk boundaries depend
/// only on n and the thread count; callers write results into disjoint
/// slots so output is independent of scheduling. The first exception thrown
/// by any chunk is rethrown.
template <class F>
void parallel_chunks(std::size_t n, unsigned threads, F&& f) {
  if (threads <= 1 || n < 4096) {
    f(std::size_t{0}, n);
    return;
  }
  const std::size_t chunks = std::min<std::size_t>(threads, n);
  const std::size_t step = (n + chunks - 1) / chunks;
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(chunks);
  for (std::size_t c = 0; c < chunks; ++c) {
    const std::size_t begin = c * step;
    const std::size_t end = std::min(n, begin + step);
    if (begin >= end) break;
    pool.emplace_back([&, c, begin, end] {
      try {
        f(begin, end);
      } catch (...) {
        errors[c] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace bezier_ifs
