#pragma once

#include <cstddef>
#include <functional>

namespace qpdt {

/// Worker count: QPDT_THREADS if set to a positive integer, otherwise the
/// hardware concurrency (at least 1).
unsigned worker_count();

/// Calls body(i) for i in [0, n). Iterations are split into contiguous blocks
/// across worker_count() threads; each index writes only its own output slot,
/// so results do not depend on the thread count. The first exception thrown
/// by any block is rethrown on the calling thread.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace qpdt
