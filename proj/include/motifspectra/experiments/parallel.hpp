#pragma once

#include <cstddef>
#include <functional>

namespace motifspectra::experiments {

/// Worker count: MOTIFSPECTRA_THREADS when set to a positive integer,
/// otherwise the hardware concurrency (at least 1).
std::size_t worker_count();

/// Runs body(i) for i in [0, count) on up to worker_count() threads. Each
/// index runs exactly once; the first exception thrown by any body is
/// rethrown after all workers stop. Bodies must only write to their own slot.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace motifspectra::experiments
