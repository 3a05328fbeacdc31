#ifndef U21_PARALLEL_HPP
#define U21_PARALLEL_HPP

#include <atomic>
#include <cstddef>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace u21 {

/// Worker count from U21_THREADS, falling back to the hardware concurrency.
inline unsigned worker_count() {
  if (const char* env = std::getenv("U21_THREADS")) {
    try {
      long n = std::stol(env);
      if (n > 0) return static_cast<unsigned>(n);
    } catch (...) {
    }
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

/// out[k] = fn(items[k]); evaluation order is unspecified, result order is not.
/// The first exception thrown by fn is rethrown after all workers join.
template <typename In, typename Fn>
auto parallel_map(const std::vector<In>& items, Fn fn, unsigned workers = worker_count())
    -> std::vector<decltype(fn(items.front()))> {
  std::vector<decltype(fn(items.front()))> out(items.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto run = [&] {
    for (std::size_t k = next++; k < items.size(); k = next++) {
      try {
        out[k] = fn(items[k]);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    }
  };
  workers = std::max(1U, std::min<unsigned>(workers, static_cast<unsigned>(items.size())));
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(run);
  run();
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
  return out;
}

}  // namespace u21

#endif  // U21_PARALLEL_HPP
