#ifndef HTCP_PARALLEL_HPP
#define HTCP_PARALLEL_HPP

#include <atomic>
#include <cstddef>
#include <functional>
#include <thread>
#include <vector>

namespace htcp {

// Runs fn(i) for i in [0, count) on up to `workers` threads. Every result is
// written to slot i of the output, so the merged result is independent of the
// worker count and of scheduling order.
template <typename R>
std::vector<R> parallel_map(std::size_t count, int workers, const std::function<R(std::size_t)>& fn) {
  std::vector<R> out(count);
  if (count == 0) return out;
  int nthreads = workers < 1 ? 1 : workers;
  if (static_cast<std::size_t>(nthreads) > count) nthreads = static_cast<int>(count);
  if (nthreads == 1) {
    for (std::size_t i = 0; i < count; ++i) out[i] = fn(i);
    return out;
  }
  std::atomic<std::size_t> next{0};
  auto work = [&]() {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= count) return;
      out[i] = fn(i);
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(nthreads);
  for (int t = 0; t < nthreads; ++t) pool.emplace_back(work);
  for (auto& th : pool) th.join();
  return out;
}

}  // namespace htcp

#endif  // HTCP_PARALLEL_HPP
