#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace cyclogcd {

// Resolves a requested width; 0 means "use the hardware concurrency".
inline unsigned resolve_threads(unsigned requested) {
  if (requested != 0) return requested;
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

// Splits [0, count) into blocks of `block` items and evaluates
// fn(begin, end) for each. Results come back in block order, so any merge
// that folds them left to right is independent of the thread count. If
// several blocks throw, the exception of the lowest block index wins.
template <class Fn>
auto map_blocks(std::size_t count, std::size_t block, unsigned threads, Fn&& fn)
    -> std::vector<decltype(fn(std::size_t{}, std::size_t{}))> {
  using Result = decltype(fn(std::size_t{}, std::size_t{}));
  if (block == 0) block = 1;
  const std::size_t blocks = (count + block - 1) / block;
  std::vector<Result> results(blocks);
  std::vector<std::exception_ptr> errors(blocks);
  std::atomic<std::size_t> next{0};

  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= blocks) return;
      const std::size_t begin = i * block;
      const std::size_t end = std::min(count, begin + block);
      try {
        results[i] = fn(begin, end);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };

  const unsigned width =
      static_cast<unsigned>(std::min<std::size_t>(resolve_threads(threads), std::max<std::size_t>(blocks, 1)));
  if (width <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(width);
    for (unsigned t = 0; t < width; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return results;
}

}  // namespace cyclogcd
