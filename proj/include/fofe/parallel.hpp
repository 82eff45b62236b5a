#pragma once

#include <cstddef>
#include <functional>

namespace fofe {

/// Worker cap: FOFE_THREADS env var, where 0 or unset means one worker per
/// hardware thread. Always >= 1.
unsigned worker_count();

/// Runs fn(block_index, begin, end) over [0, n) split into one contiguous
/// block per worker and joins. Callers are responsible for merging any
/// per-block results in block order so output stays identical regardless of
/// the worker count.
void parallel_blocks(std::size_t n,
                     const std::function<void(unsigned, std::size_t, std::size_t)>& fn);

}  // namespace fofe
