#pragma once

#include <cstddef>
#include <functional>

namespace semicircle_lab {

/// Worker count used when a caller passes threads == 0: the value of
/// SEMICIRCLE_LAB_THREADS if set, else std::thread::hardware_concurrency().
std::size_t default_thread_count();

/// Runs task(i) for i in [0, count) on up to `threads` workers. Tasks must
/// write only to their own output slot; callers reduce in index order, so
/// results do not depend on scheduling. The first exception is rethrown.
void parallel_for(std::size_t count, std::size_t threads,
                  const std::function<void(std::size_t)>& task);

}  // namespace semicircle_lab
