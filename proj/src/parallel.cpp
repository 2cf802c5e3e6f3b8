#include "qpas/parallel.hpp"

#include <atomic>
#include <exception>
#include <thread>
#include <vector>

namespace qpas {

void parallel_blocks(std::int64_t n, std::int64_t block, int threads,
                     const std::function<void(std::int64_t, std::int64_t)>& fn) {
  if (n <= 0) return;
  if (block <= 0) block = 1;
  const std::int64_t nblocks = (n + block - 1) / block;
  if (threads <= 1 || nblocks <= 1) {
    for (std::int64_t b = 0; b < nblocks; ++b)
      fn(b * block, std::min(n, (b + 1) * block));
    return;
  }

  std::atomic<std::int64_t> next{0};
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(nblocks));
  auto worker = [&]() {
    for (;;) {
      const std::int64_t b = next.fetch_add(1, std::memory_order_relaxed);
      if (b >= nblocks) return;
      try {
        fn(b * block, std::min(n, (b + 1) * block));
      } catch (...) {
        errors[static_cast<std::size_t>(b)] = std::current_exception();
      }
    }
  };

  const int nworkers = static_cast<int>(std::min<std::int64_t>(threads, nblocks));
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(nworkers));
  for (int t = 0; t < nworkers; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();

  // Rethrow the lowest-block failure so the surfaced error is reproducible.
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace qpas
