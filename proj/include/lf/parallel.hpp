#pragma once

#include <cstddef>
#include <functional>

namespace lf {

// Worker count: LATTICE_FLOQUET_THREADS if set to a positive integer (capped by
// the hardware), otherwise the hardware concurrency.
int thread_count();

// Calls fn(i) for every i in [0, n). Each index is independent, so results written
// to per-index slots do not depend on scheduling. The exception raised at the
// lowest index is rethrown.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace lf
