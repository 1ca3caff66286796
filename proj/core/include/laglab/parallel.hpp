#ifndef LAGLAB_PARALLEL_HPP
#define LAGLAB_PARALLEL_HPP

#include <cstddef>
#include <functional>

namespace laglab {

/// 0 means auto: the LAGLAB_THREADS environment variable if it holds a
/// positive integer, otherwise the hardware concurrency.
int resolve_threads(int requested);

/// Runs body(i) for every i in [0, n) on up to `threads` workers. Each index
/// runs exactly once; callers write results into per-index slots so the
/// outcome does not depend on scheduling. The exception from the lowest
/// failing index is rethrown after all workers join.
void parallel_for(std::size_t n, int threads, const std::function<void(std::size_t)>& body);

}  // namespace laglab

#endif  // LAGLAB_PARALLEL_HPP
