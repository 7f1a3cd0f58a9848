#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace graphent {

/// Splits [0, count) into fixed chunks, runs fn(begin, end) on up to
/// `workers` threads and returns the results in chunk order. The chunk
/// layout does not depend on the worker count.
template <typename Result, typename Fn>
std::vector<Result> parallel_chunks(std::uint64_t count, unsigned workers, Fn&& fn,
                                    std::uint64_t chunk = 256) {
  const std::uint64_t chunks = (count + chunk - 1) / chunk;
  std::vector<Result> results(chunks);
  std::atomic<std::uint64_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;

  auto work = [&] {
    for (std::uint64_t c = next++; c < chunks; c = next++) {
      try {
        results[c] = fn(c * chunk, std::min(count, (c + 1) * chunk));
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = chunks;
      }
    }
  };

  const unsigned threads =
      static_cast<unsigned>(std::min<std::uint64_t>(std::max(1U, workers), std::max<std::uint64_t>(chunks, 1)));
  if (threads <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work);
    for (auto& th : pool) th.join();
  }
  if (failure) std::rethrow_exception(failure);
  return results;
}

}  // namespace graphent
