#pragma once

#include <cstddef>
#include <functional>

namespace abc {

/// Runs fn(i) for i in [0, count) on up to `workers` threads, splitting the
/// range into contiguous chunks. Results must be written to per-index slots;
/// the chunking never influences output. The first exception thrown by any
/// worker is rethrown on the calling thread after all workers join.
void parallel_for(std::size_t count, int workers,
                  const std::function<void(std::size_t)>& fn);

} // namespace abc
