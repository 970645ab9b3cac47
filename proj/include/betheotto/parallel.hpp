#pragma once

#include <cstddef>
#include <functional>

namespace betheotto {

// Thread count resolution: explicit argument > BETHEOTTO_THREADS env > hardware.
int resolve_thread_count(int requested = 0);

// Runs f(i) for i in [0, n) on up to `threads` workers. Work items must be
// independent; callers collect results into preallocated slots indexed by i,
// so the outcome never depends on scheduling. Nested calls run serially on
// the calling thread. The first exception thrown by any item is rethrown.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& f, int threads = 0);

} // namespace betheotto
