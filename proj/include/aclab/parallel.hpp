#pragma once

#include <functional>

namespace aclab {

// Worker count from ACLAB_THREADS (default 1).
int thread_count();

// Runs body(i) for i in [0, n) on thread_count() threads. Each index is visited once;
// callers write results into per-index slots, so aggregation order stays deterministic.
void parallel_for(int n, const std::function<void(int)>& body);

} // namespace aclab
