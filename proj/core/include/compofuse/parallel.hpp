#pragma once

#include <cstdint>
#include <functional>

namespace compofuse {

/// Worker cap: COMPOFUSE_THREADS if set, else hardware concurrency (max 8).
int max_threads();

/// Overrides the cap for this process (CLI and tests).
void set_max_threads(int n);

/// Runs fn(i) for i in [begin, end) on a static partition of a shared pool.
/// Each index is handled entirely by one worker, so any per-index accumulation
/// keeps its sequential order and results do not depend on the thread count.
void parallel_for(int64_t begin, int64_t end, const std::function<void(int64_t)>& fn);

/// Static range partition: worker t handles [chunks[t], chunks[t+1]).
void parallel_ranges(int64_t begin, int64_t end,
                     const std::function<void(int64_t, int64_t)>& fn);

}  // namespace compofuse
