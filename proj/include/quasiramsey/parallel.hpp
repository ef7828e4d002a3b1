#pragma once

#include <cstddef>
#include <functional>

namespace quasiramsey {

// QUASIRAMSEY_THREADS if set to a positive integer, else the hardware count.
int thread_count();

// Runs body(i) for i in [0, count) on up to `threads` workers. Callers write
// into slot i of a preallocated vector so results keep input order. The first
// exception thrown (lowest index) is rethrown after all workers finish.
void parallel_for(std::size_t count, int threads, const std::function<void(std::size_t)>& body);

}  // namespace quasiramsey
