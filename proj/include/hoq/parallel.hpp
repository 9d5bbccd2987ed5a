#pragma once

#include <cstddef>
#include <functional>

namespace hoq {

/// Worker count from HOQ_THREADS (0 or unset = hardware concurrency).
int worker_count();

/// Runs fn(i) for i in [0, count) across workers. Tasks must be independent;
/// callers own determinism by writing to disjoint slots.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn);

}  // namespace hoq
