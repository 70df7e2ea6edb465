#pragma once
// Deterministic chunked parallelism: the work range is cut into fixed chunks,
// workers grab chunks by atomic counter, and results land in a slot array
// indexed by chunk.  The caller folds the slots in chunk order, so the merged
// outcome is identical for 1 thread and N threads.

#include <atomic>
#include <cstdint>
#include <functional>
#include <thread>
#include <vector>

namespace crosspart {

constexpr std::uint64_t kChunkSize = 1024;

// Runs work(chunk_index) for chunk_index in [0, chunk_count) and returns the
// results ordered by chunk index.  threads <= 1 runs inline.
template <typename R>
std::vector<R> run_chunks(std::uint64_t chunk_count, int threads,
                          const std::function<R(std::uint64_t)>& work) {
  std::vector<R> slots(chunk_count);
  if (threads <= 1 || chunk_count <= 1) {
    for (std::uint64_t c = 0; c < chunk_count; c++) slots[c] = work(c);
    return slots;
  }
  std::atomic<std::uint64_t> next{0};
  auto worker = [&]() {
    for (;;) {
      std::uint64_t c = next.fetch_add(1);
      if (c >= chunk_count) return;
      slots[c] = work(c);
    }
  };
  std::vector<std::thread> pool;
  int spawn = threads;
  if (static_cast<std::uint64_t>(spawn) > chunk_count) spawn = static_cast<int>(chunk_count);
  pool.reserve(static_cast<std::size_t>(spawn));
  for (int i = 0; i < spawn; i++) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  return slots;
}

// Plain parallel for over [0, total) in kChunkSize chunks; body must only
// write state owned by its own index range.
inline void parallel_for(std::uint64_t total, int threads,
                         const std::function<void(std::uint64_t, std::uint64_t)>& body) {
  std::uint64_t chunk_count = (total + kChunkSize - 1) / kChunkSize;
  if (chunk_count == 0) return;
  run_chunks<int>(chunk_count, threads, [&](std::uint64_t c) {
    std::uint64_t lo = c * kChunkSize;
    std::uint64_t hi = lo + kChunkSize;
    if (hi > total) hi = total;
    body(lo, hi);
    return 0;
  });
}

}  // namespace crosspart
