#pragma once

#include <cstddef>
#include <functional>

namespace vandervolt {

/// Worker count for parallel sections: the VANDERVOLT_THREADS environment
/// variable when set to a positive value, otherwise (or when 0) the
/// hardware concurrency.
int worker_count();

/// Runs fn(i) for i in [0, count). Work is split in contiguous blocks over
/// worker_count() threads; callers must make writes index-disjoint so the
/// result is independent of scheduling.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn);

}  // namespace vandervolt
