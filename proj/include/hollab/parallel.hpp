#pragma once

#include <cstddef>
#include <functional>

namespace hollab {

// Worker count: HOLLAB_THREADS if set and positive, else hardware concurrency.
unsigned thread_count();

// Runs body(i) for i in [0, n) over thread_count() workers.  Each index is
// visited exactly once; callers write results into slot i, so output order
// never depends on scheduling.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace hollab
