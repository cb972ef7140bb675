#pragma once

#include <cstddef>
#include <functional>

namespace chermnykh {

/// Worker count: CHERMNYKH_THREADS if set to a positive integer, otherwise the
/// hardware concurrency (at least 1).
unsigned thread_count();

/// Run body(i) for i in [0, n) across thread_count() workers. Each index is
/// visited exactly once; the first exception thrown is rethrown after all
/// workers finish.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace chermnykh
