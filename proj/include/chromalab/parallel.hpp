#pragma once

#include <cstddef>
#include <functional>

namespace chromalab {

/// Worker count: CHROMATIC_LAB_THREADS if set to a positive integer,
/// otherwise the hardware concurrency (at least 1).
unsigned worker_count();

/// Runs task(i) for i in [0, count) on up to `threads` workers (0 means
/// worker_count()). Tasks must write only to their own slot of any shared
/// output. The first exception thrown by a task is rethrown.
void parallel_for(std::size_t count, unsigned threads, const std::function<void(std::size_t)>& task);

} // namespace chromalab
