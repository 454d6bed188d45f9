#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <thread>
#include <vector>

namespace isolab {

/// Runs task(i) for i in [0, count) on up to `workers` threads. Tasks are
/// claimed from a shared counter; each must write only to its own slot. If
/// tasks throw, the exception of the lowest failing index is rethrown after
/// all threads join, so failures do not depend on scheduling.
template <class Task>
void parallel_for(std::uint64_t count, unsigned workers, Task&& task) {
  std::vector<std::exception_ptr> errors(count);
  std::atomic<std::uint64_t> next{0};
  auto drain = [&] {
    for (std::uint64_t i = next++; i < count; i = next++) {
      try {
        task(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };

  const auto threads = static_cast<unsigned>(std::min<std::uint64_t>(std::max(workers, 1U), count));
  if (threads <= 1) {
    drain();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(drain);
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace isolab
