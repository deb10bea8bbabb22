#pragma once

#include <cstddef>
#include <functional>
#include <thread>
#include <vector>

namespace liftcount {

// Worker count: LIFTCOUNT_THREADS if set (>= 1), else hardware concurrency.
std::size_t worker_count();

// Runs fn(worker, begin, end) on `workers` threads over [0, total) split into
// contiguous chunks. Results must be merged by the caller; all merge paths in
// this project are exact-rational sums, so any split yields identical output.
void parallel_chunks(std::size_t total, std::size_t workers,
                     const std::function<void(std::size_t, std::size_t, std::size_t)>& fn);

}  // namespace liftcount
