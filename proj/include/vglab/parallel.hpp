#pragma once

#include <cstddef>
#include <thread>
#include <vector>

namespace vglab {

/// Runs body(i) for i in [0, n). With jobs <= 1 this is a plain loop;
/// otherwise indices are dealt round-robin to worker threads. Callers keep
/// determinism by writing into index-addressed slots and merging in order.
template <class F>
void parallel_for(std::size_t n, unsigned jobs, F&& body) {
  if (jobs <= 1 || n <= 1) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  unsigned workers = jobs < n ? jobs : static_cast<unsigned>(n);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (std::size_t i = w; i < n; i += workers) body(i);
    });
  }
  for (auto& t : pool) t.join();
}

}  // namespace vglab
