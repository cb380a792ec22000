#include "conic/parallel.hpp"

#include <algorithm>
#include <cstdlib>
#include <thread>
#include <vector>

namespace conic {

unsigned thread_cap() {
  static const unsigned cap = [] {
    if (const char* env = std::getenv("CONIC_SCHEMES_THREADS")) {
      long v = std::strtol(env, nullptr, 10);
      if (v >= 1) return static_cast<unsigned>(std::min<long>(v, 256));
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? hw : 1u;
  }();
  return cap;
}

void parallel_chunks(std::size_t n,
                     const std::function<void(unsigned, std::size_t, std::size_t)>& fn) {
  if (n == 0) return;
  const std::size_t workers = std::min<std::size_t>({thread_cap(), n, 64});
  if (workers <= 1) {
    fn(0, 0, n);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  const std::size_t base = n / workers, extra = n % workers;
  std::size_t lo = 0;
  for (std::size_t c = 0; c < workers; ++c) {
    const std::size_t hi = lo + base + (c < extra ? 1 : 0);
    pool.emplace_back(fn, static_cast<unsigned>(c), lo, hi);
    lo = hi;
  }
  for (auto& t : pool) t.join();
}

}  // namespace conic
