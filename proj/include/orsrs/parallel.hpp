#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace orsrs::detail {

/// Runs f(begin, end, chunk) over `threads` contiguous chunks of [0, count).
/// Chunk c always covers the same range for a given (count, threads), so
/// callers can merge per-chunk results in chunk order for deterministic output.
/// The first exception thrown by any chunk is rethrown after all joins.
template <typename F>
void parallel_chunks(std::size_t count, unsigned threads, F&& f) {
  const std::size_t chunks = std::max<std::size_t>(1, std::min<std::size_t>(threads, count));
  if (chunks == 1) {
    f(std::size_t{0}, count, std::size_t{0});
    return;
  }
  std::vector<std::exception_ptr> errors(chunks);
  {
    std::vector<std::jthread> workers;
    workers.reserve(chunks);
    for (std::size_t c = 0; c < chunks; ++c) {
      const std::size_t begin = count * c / chunks;
      const std::size_t end = count * (c + 1) / chunks;
      workers.emplace_back([&, begin, end, c] {
        try {
          f(begin, end, c);
        } catch (...) {
          errors[c] = std::current_exception();
        }
      });
    }
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

/// Number of chunks parallel_chunks will use.
inline std::size_t chunk_count(std::size_t count, unsigned threads) {
  return std::max<std::size_t>(1, std::min<std::size_t>(threads, count));
}

}  // namespace orsrs::detail
