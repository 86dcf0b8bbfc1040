// Copyright 2026 The starshape Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <exception>
#include <string>
#include <thread>
#include <vector>

namespace starshape {

/// Samples per RNG stream when work is split into blocks.
inline constexpr std::size_t kBlockSize = 4096;

/// Worker count: STARSHAPE_THREADS if set and positive, else 1.
inline unsigned worker_count() {
  if (const char* env = std::getenv("STARSHAPE_THREADS")) {
    try {
      const long value = std::stol(env);
      if (value > 0) return static_cast<unsigned>(value);
    } catch (...) {
    }
  }
  return 1;
}

/*!
 * Run fn(block, begin, end) over [0, n) split into fixed-size blocks.
 *
 * Blocks are assigned to workers round-robin. Because each block is
 * identified by its index (callers key their RNG stream on it), the
 * combined output does not depend on the worker count.
 */
template <class Fn>
void for_each_block(std::size_t n, Fn&& fn, std::size_t block_size = kBlockSize,
                    unsigned workers = worker_count()) {
  const std::size_t blocks = (n + block_size - 1) / block_size;
  auto run_block = [&](std::size_t b) {
    const std::size_t begin = b * block_size;
    fn(static_cast<std::uint64_t>(b), begin, std::min(n, begin + block_size));
  };
  workers = static_cast<unsigned>(
      std::max<std::size_t>(1, std::min<std::size_t>(workers, blocks)));
  if (workers <= 1) {
    for (std::size_t b = 0; b < blocks; ++b) run_block(b);
    return;
  }
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (std::size_t b = w; b < blocks; b += workers) run_block(b);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace starshape
