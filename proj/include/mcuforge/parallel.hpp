#pragma once

#include <cstddef>
#include <functional>

namespace mcuforge {

/// Worker cap: MCU_FORGE_THREADS if set (clamped to >= 1), otherwise the
/// hardware concurrency.
int worker_count();

/// Runs fn over [0, total) split into contiguous chunks, one worker thread per
/// chunk. fn must only write to chunk-local or disjoint state; results must
/// not depend on execution order.
void parallel_chunks(std::size_t total, const std::function<void(std::size_t, std::size_t)>& fn);

}  // namespace mcuforge
