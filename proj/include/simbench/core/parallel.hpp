#pragma once

#include <functional>

namespace simbench {

/// Worker threads for internal loops. Reads SIMBENCH_THREADS once; falls
/// back to hardware concurrency.
int thread_count();

/// Runs fn(i) for i in [begin, end). Work is split into contiguous
/// ranges; results are deterministic as long as iterations write
/// disjoint data.
void parallel_for(int begin, int end, const std::function<void(int)>& fn);

}  // namespace simbench
