// Copyright 2026 The gaplab authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

#include "gaplab/ints.hpp"

namespace gaplab::par {

// Splits [lo, hi] into consecutive chunks of at most chunk_size values and
// evaluates worker(chunk_lo, chunk_hi) -> R for each, on up to `threads`
// workers. Results come back indexed by chunk position, so a sequential fold
// over them visits the range in order and the outcome is independent of
// scheduling. Workers must not share mutable state.
template <typename R, typename Worker>
std::vector<R> map_chunks(u64 lo, u64 hi, u64 chunk_size, unsigned threads,
                          Worker worker) {
  if (chunk_size == 0) chunk_size = 1;
  u64 span = hi - lo + 1;
  size_t n_chunks = static_cast<size_t>((span + chunk_size - 1) / chunk_size);
  std::vector<R> results(n_chunks);
  std::atomic<size_t> next{0};
  std::exception_ptr err;
  std::mutex err_mu;
  auto body = [&] {
    for (;;) {
      size_t i = next.fetch_add(1, std::memory_order_relaxed);
      if (i >= n_chunks) return;
      u64 clo = lo + i * chunk_size;
      u64 chi = clo + std::min(hi - clo, chunk_size - 1);
      try {
        results[i] = worker(clo, chi);
      } catch (...) {
        std::lock_guard<std::mutex> g(err_mu);
        if (!err) err = std::current_exception();
        return;
      }
    }
  };
  if (threads <= 1 || n_chunks <= 1) {
    body();
  } else {
    size_t n = std::min<size_t>(threads, n_chunks);
    std::vector<std::thread> pool;
    pool.reserve(n);
    for (size_t i = 0; i < n; ++i) pool.emplace_back(body);
    for (auto& t : pool) t.join();
  }
  if (err) std::rethrow_exception(err);
  return results;
}

}  // namespace gaplab::par
