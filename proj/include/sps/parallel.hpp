#pragma once

#include <cstddef>
#include <functional>

namespace sps::par {

// Worker count used by chunked loops. 0 = hardware concurrency.
// Deterministic code must not depend on this value, only on chunking.
void set_thread_count(unsigned n);
unsigned thread_count();

// Runs fn(chunk_index) for chunk_index in [0, n_chunks) across workers.
// Chunks must write to disjoint state.
void run_chunks(std::size_t n_chunks, const std::function<void(std::size_t)>& fn);

}  // namespace sps::par
