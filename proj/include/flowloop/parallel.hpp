#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace flowloop {

/// Worker count: FLOWLOOP_THREADS if set to a positive integer, otherwise the
/// hardware concurrency (at least 1).
unsigned thread_budget();

/// Runs task(i) for i in [0, count) on up to thread_budget() threads.  Each
/// index writes only its own output slot, so results do not depend on
/// scheduling.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& task);

template <typename T, typename Fn>
std::vector<T> parallel_map(std::size_t count, Fn&& fn) {
  std::vector<T> out(count);
  parallel_for(count, [&](std::size_t i) { out[i] = fn(i); });
  return out;
}

}  // namespace flowloop
