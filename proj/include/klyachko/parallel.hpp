#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace klyachko {

/// Splits [0, count) into contiguous chunks, one per worker, and calls
/// fn(begin, end, worker). Chunk boundaries depend only on count and
/// threads, so per-worker partial results can be merged deterministically.
template <typename Fn>
void parallel_chunks(std::size_t count, unsigned threads, Fn&& fn) {
  threads = std::max(1U, threads);
  if (threads == 1 || count < 2 * threads) {
    fn(std::size_t{0}, count, 0U);
    return;
  }
  const std::size_t chunk = (count + threads - 1) / threads;
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(threads);
  for (unsigned w = 0; w < threads; ++w) {
    const std::size_t begin = std::min(count, w * chunk);
    const std::size_t end = std::min(count, begin + chunk);
    pool.emplace_back([&, begin, end, w] {
      try {
        fn(begin, end, w);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

inline unsigned worker_count(unsigned requested, std::size_t count) {
  return static_cast<unsigned>(std::max<std::size_t>(
      1, std::min<std::size_t>(requested == 0 ? 1 : requested, count)));
}

}  // namespace klyachko
