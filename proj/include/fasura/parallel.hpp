#pragma once

#include <cstddef>
#include <functional>
#include <thread>
#include <vector>

namespace fasura {

// Runs fn(i) for i in [0, n). Work units are fixed and results must be
// written to disjoint locations, so the outcome is identical for any thread
// count; threading only changes which thread executes which unit.
inline void parallel_for(std::size_t n, int num_threads,
                         const std::function<void(std::size_t)>& fn) {
  if (num_threads <= 1 || n <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::size_t workers = std::min<std::size_t>(num_threads, n);
  std::vector<std::thread> threads;
  threads.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    threads.emplace_back([&, w] {
      for (std::size_t i = w; i < n; i += workers) fn(i);
    });
  }
  for (auto& t : threads) t.join();
}

}  // namespace fasura
