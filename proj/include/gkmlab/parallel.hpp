#pragma once

#include <functional>

namespace gkm {

/// Worker count: GKMLAB_THREADS if set (>= 1), else the hardware concurrency.
int thread_count();

/// Runs body(0..n-1), possibly concurrently. The first exception thrown by
/// any iteration is rethrown after all workers finish.
void parallel_for(int n, const std::function<void(int)>& body);

}  // namespace gkm
