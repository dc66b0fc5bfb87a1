#pragma once

#include <cstddef>
#include <functional>

namespace fewnomial {

/// Upper bound on worker threads: FEWNOMIAL_THREADS if set to a positive
/// integer, otherwise the hardware concurrency.
std::size_t thread_limit();

/// Overrides the environment for the current process (0 restores it).
void set_thread_limit(std::size_t limit);

/**
 * Runs body(0..count-1), possibly on several threads. Calls made from inside
 * a running body execute serially. The first exception thrown by any body is
 * rethrown after all workers finish.
 */
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace fewnomial
