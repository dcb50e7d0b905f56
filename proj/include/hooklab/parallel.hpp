#pragma once

#include <algorithm>
#include <cstdint>
#include <exception>
#include <optional>
#include <thread>
#include <vector>

namespace hooklab {

/// Splits [0, count) into one contiguous chunk per worker, evaluates
/// chunk(first, last) on each, and folds the results in chunk order with
/// combine. The combiner must be associative and commutative for the result
/// not to depend on the thread count.
template <class T, class ChunkFn, class Combine>
T parallel_fold(std::uint64_t count, unsigned threads, T init, ChunkFn chunk, Combine combine) {
  const std::uint64_t workers = std::max<std::uint64_t>(1, std::min<std::uint64_t>(threads, count));
  if (workers == 1) return combine(std::move(init), chunk(std::uint64_t{0}, count));

  std::vector<std::optional<T>> results(workers);
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::uint64_t w = 0; w < workers; ++w) {
    const std::uint64_t first = count * w / workers;
    const std::uint64_t last = count * (w + 1) / workers;
    pool.emplace_back([&, w, first, last] {
      try {
        results[w].emplace(chunk(first, last));
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  for (auto& r : results) init = combine(std::move(init), std::move(*r));
  return init;
}

}  // namespace hooklab
