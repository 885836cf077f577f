#pragma once

#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace ffgeom {

/// Runs body(worker, begin, end) over contiguous shards of [0, count).
/// Shard boundaries depend only on (count, workers); callers merge results
/// in shard order so output never depends on scheduling.
template <typename Body>
void parallel_shards(std::size_t count, unsigned workers, Body&& body) {
  if (workers <= 1 || count < 2) {
    body(0u, std::size_t{0}, count);
    return;
  }
  if (workers > count) workers = static_cast<unsigned>(count);
  std::vector<std::thread> threads;
  std::vector<std::exception_ptr> errors(workers);
  threads.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    const std::size_t begin = count * w / workers;
    const std::size_t end = count * (w + 1) / workers;
    threads.emplace_back([&, w, begin, end] {
      try {
        body(w, begin, end);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : threads) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace ffgeom
