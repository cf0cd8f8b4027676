#pragma once

// Internal helper: index-parallel evaluation with results written to
// caller-owned slots, so reductions stay in a fixed order and outputs are
// identical for any thread count. Not installed.

#include <functional>

namespace icrates::detail {

// Resolves the worker count: requested if > 0, else the ICRATES_THREADS
// environment variable, else hardware concurrency (at least 1).
int resolve_thread_count(int requested);

// Runs fn(i) for every i in [0, n) over contiguous chunks. fn must be safe
// to call concurrently for distinct i. The first exception thrown by any
// worker is rethrown after all workers join.
void parallel_for(long n, int requested_threads, const std::function<void(long)>& fn);

}  // namespace icrates::detail
