#pragma once

#include <cstddef>
#include <functional>

namespace eulerwaves {

/// Worker count: EULER_WAVES_THREADS if set and positive, else hardware concurrency.
unsigned worker_count();

/// Runs body(i) for i in [0, n) across worker threads. Each index is visited once;
/// callers write into preallocated slots so the result does not depend on scheduling.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace eulerwaves
