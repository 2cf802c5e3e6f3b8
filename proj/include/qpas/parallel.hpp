#pragma once

#include <cstdint>
#include <functional>

namespace qpas {

/// Runs fn(lo, hi) over [0, n) split into fixed-size blocks. The partition
/// depends only on n and block, never on the worker count, so work writing
/// to disjoint preallocated slots produces identical results for any
/// `threads` value.
void parallel_blocks(std::int64_t n, std::int64_t block, int threads,
                     const std::function<void(std::int64_t, std::int64_t)>& fn);

}  // namespace qpas
