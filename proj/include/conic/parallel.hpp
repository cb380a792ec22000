#pragma once
#include <cstddef>
#include <functional>

namespace conic {

// Worker count: CONIC_SCHEMES_THREADS if set (>=1), else hardware concurrency.
unsigned thread_cap();

// Runs fn(chunk_index, begin, end) over a fixed partition of [0, n).
// The partition depends only on n and the thread cap, never on scheduling,
// so per-chunk outputs merged in chunk order are deterministic.
void parallel_chunks(std::size_t n,
                     const std::function<void(unsigned, std::size_t, std::size_t)>& fn);

}  // namespace conic
