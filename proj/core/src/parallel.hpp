#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <limits>
#include <optional>
#include <thread>
#include <vector>

namespace nihoperm::detail {

inline unsigned resolve_threads(unsigned requested) {
  if (requested != 0) return requested;
  return std::max(1u, std::thread::hardware_concurrency());
}

/// Smallest i in [begin, end) with fails(i), or nullopt. Chunks are handed
/// out in increasing order and a chunk is skipped only when it starts past
/// the best index found so far, so the result does not depend on scheduling.
template <typename Pred>
std::optional<std::uint64_t> parallel_find_first(std::uint64_t begin, std::uint64_t end, unsigned threads,
                                                 const Pred& fails) {
  constexpr std::uint64_t kNone = std::numeric_limits<std::uint64_t>::max();
  constexpr std::uint64_t kChunk = 64;
  if (begin >= end) return std::nullopt;

  std::atomic<std::uint64_t> next{begin};
  std::atomic<std::uint64_t> best{kNone};
  auto worker = [&] {
    for (;;) {
      const std::uint64_t start = next.fetch_add(kChunk, std::memory_order_relaxed);
      if (start >= end || start >= best.load(std::memory_order_relaxed)) return;
      const std::uint64_t stop = std::min(end, start + kChunk);
      for (std::uint64_t i = start; i < stop; ++i) {
        if (i >= best.load(std::memory_order_relaxed)) return;
        if (fails(i)) {
          std::uint64_t cur = best.load(std::memory_order_relaxed);
          while (i < cur && !best.compare_exchange_weak(cur, i, std::memory_order_relaxed)) {
          }
          return;
        }
      }
    }
  };

  const unsigned count = static_cast<unsigned>(
      std::min<std::uint64_t>(resolve_threads(threads), (end - begin + kChunk - 1) / kChunk));
  if (count <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(count);
    for (unsigned t = 0; t < count; ++t) pool.emplace_back(worker);
  }
  const std::uint64_t found = best.load();
  if (found == kNone) return std::nullopt;
  return found;
}

}  // namespace nihoperm::detail

namespace nihoperm::detail {

/// Calls body(i) for every i in [0, count), spread over worker threads.
template <typename Body>
void parallel_for(std::uint64_t count, unsigned threads, const Body& body) {
  constexpr std::uint64_t kChunk = 16;
  std::atomic<std::uint64_t> next{0};
  auto worker = [&] {
    for (;;) {
      const std::uint64_t start = next.fetch_add(kChunk, std::memory_order_relaxed);
      if (start >= count) return;
      const std::uint64_t stop = std::min(count, start + kChunk);
      for (std::uint64_t i = start; i < stop; ++i) body(i);
    }
  };
  const unsigned n = static_cast<unsigned>(
      std::min<std::uint64_t>(resolve_threads(threads), (count + kChunk - 1) / kChunk));
  if (n <= 1) {
    worker();
    return;
  }
  std::vector<std::jthread> pool;
  pool.reserve(n);
  for (unsigned t = 0; t < n; ++t) pool.emplace_back(worker);
}

}  // namespace nihoperm::detail
