#include "sps/parallel.hpp"

#include <atomic>
#include <thread>
#include <vector>

namespace sps::par {

namespace {
std::atomic<unsigned> g_threads{0};
}

void set_thread_count(unsigned n) { g_threads.store(n); }

unsigned thread_count() {
  unsigned n = g_threads.load();
  if (n == 0) {
    n = std::thread::hardware_concurrency();
    if (n == 0) n = 1;
  }
  return n;
}

void run_chunks(std::size_t n_chunks, const std::function<void(std::size_t)>& fn) {
  unsigned workers = thread_count();
  if (workers <= 1 || n_chunks <= 1) {
    for (std::size_t i = 0; i < n_chunks; ++i) fn(i);
    return;
  }
  if (workers > n_chunks) workers = static_cast<unsigned>(n_chunks);
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (;;) {
        std::size_t i = next.fetch_add(1);
        if (i >= n_chunks) break;
        fn(i);
      }
    });
  }
  for (auto& t : pool) t.join();
}

}  // namespace sps::par
