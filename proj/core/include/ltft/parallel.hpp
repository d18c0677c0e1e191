#pragma once

#include <cstddef>
#include <functional>

namespace ltft {

/// Worker count: LTFT_THREADS if set (>= 1), otherwise hardware concurrency.
std::size_t thread_count();

/// Override the worker count for the current process (0 restores the default).
void set_thread_count(std::size_t count);

/// Runs body(begin, end) over a static partition of [0, n). Blocks until done.
/// Partition boundaries depend only on n and the worker count; callers that need
/// schedule-independent results must make each index's work independent.
void parallel_for(std::size_t n, const std::function<void(std::size_t, std::size_t)>& body,
                  std::size_t min_chunk = 1);

}  // namespace ltft
