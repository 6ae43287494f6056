#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdlib>
#include <exception>
#include <thread>
#include <vector>

namespace mdslab {

// Worker count: MDSLAB_THREADS if set and positive, otherwise hardware concurrency.
inline unsigned worker_count() {
  if (const char* env = std::getenv("MDSLAB_THREADS")) {
    long v = std::strtol(env, nullptr, 10);
    if (v > 0) return static_cast<unsigned>(v);
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

// Sums body(i) over [0, count). Chunks are contiguous and partials are combined
// in chunk order, so the result does not depend on the worker count.
template <class T, class Body>
T parallel_sum(std::size_t count, Body body, T zero = T()) {
  unsigned workers = std::min<std::size_t>(worker_count(), std::max<std::size_t>(count, 1));
  if (workers <= 1) {
    T acc = zero;
    for (std::size_t i = 0; i < count; ++i) acc += body(i);
    return acc;
  }
  std::vector<T> partial(workers, zero);
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> pool;
  std::size_t chunk = (count + workers - 1) / workers;
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        std::size_t lo = w * chunk, hi = std::min(count, lo + chunk);
        for (std::size_t i = lo; i < hi; ++i) partial[w] += body(i);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  T acc = zero;
  for (auto& p : partial) acc += p;
  return acc;
}

}  // namespace mdslab
