#pragma once
#include <cstddef>
#include <functional>

namespace syzygy {

// 0 means "use hardware concurrency".
unsigned resolve_threads(unsigned requested);

// Runs body(i) for i in [0, n) on up to `threads` workers. Indices are claimed
// dynamically; the first exception thrown by a worker is rethrown.
void parallel_for(std::size_t n, unsigned threads, const std::function<void(std::size_t)>& body);

}  // namespace syzygy
