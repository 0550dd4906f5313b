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

#include <bit>
#include <optional>
#include <vector>

#include "gaplab/ints.hpp"

namespace gaplab {

struct SieveConfig {
  // Maximum candidates per materialized segment. Larger windows are processed
  // in slices of this size. Overridable via config file, GAPLAB_SEGMENT_SIZE,
  // or --segment-size (flag > file > env > default).
  u64 segment_size = u64{1} << 22;
};

// Primality flags for the inclusive range [lo, hi], one bit per integer,
// bit set <=> prime. Bits past hi in the last word are kept zero so that
// whole-word popcounts are exact.
class Segment {
 public:
  Segment(u64 lo, u64 hi);

  u64 lo() const { return lo_; }
  u64 hi() const { return hi_; }
  u64 size() const { return hi_ - lo_ + 1; }

  bool test(u64 value) const {
    if (value < lo_ || value > hi_) return false;
    u64 i = value - lo_;
    return (words_[i >> 6] >> (i & 63)) & 1;
  }

  void clear(u64 value) {
    u64 i = value - lo_;
    words_[i >> 6] &= ~(u64{1} << (i & 63));
  }

  // Number of set bits, i.e. primes in [lo, hi].
  u64 count() const {
    u64 n = 0;
    for (u64 w : words_) n += std::popcount(w);
    return n;
  }

  template <typename Fn>
  void for_each_prime(Fn&& fn) const {
    for (size_t w = 0; w < words_.size(); ++w) {
      u64 bits = words_[w];
      while (bits) {
        fn(lo_ + (static_cast<u64>(w) << 6) + std::countr_zero(bits));
        bits &= bits - 1;
      }
    }
  }

 private:
  u64 lo_, hi_;
  std::vector<u64> words_;
};

// Segmented sieve of Eratosthenes. Base primes up to sqrt(hi) are cached and
// grown on demand, so reusing one instance across nearby ranges is cheap.
// Instances are not thread safe; parallel scans give each worker its own.
class SegmentedSieve {
 public:
  explicit SegmentedSieve(SieveConfig cfg = {}) : cfg_(cfg) {}

  const SieveConfig& config() const { return cfg_; }

  // Sieve [lo, hi] into a Segment.
  // pre: 2 <= lo <= hi < 2^63 and hi - lo + 1 <= config().segment_size.
  // throws std::invalid_argument, std::overflow_error, std::length_error.
  Segment segment(u64 lo, u64 hi);

  // Primes in [lo, hi] in ascending order, sliced internally; any window size.
  template <typename Fn>
  void for_each_prime(u64 lo, u64 hi, Fn&& fn) {
    if (lo < 2) lo = 2;
    if (lo > hi) return;
    check_upper(hi);
    for (u64 wlo = lo;;) {
      u64 whi = wlo + std::min(hi - wlo, cfg_.segment_size - 1);
      segment(wlo, whi).for_each_prime(fn);
      if (whi >= hi) return;
      wlo = whi + 1;
    }
  }

  // #{ p prime : a < p < b }. pre: a <= b < 2^63.
  u64 count_open(u64 a, u64 b);

 private:
  void ensure_base(u64 limit);
  static void check_upper(u64 hi);

  SieveConfig cfg_;
  u64 base_limit_ = 0;
  std::vector<u32> base_;
};

// One-shot conveniences over a fresh SegmentedSieve.
Segment sieve_segment(u64 lo, u64 hi, SieveConfig cfg = {});
u64 count_primes_open(u64 a, u64 b, SieveConfig cfg = {});

// Deterministic Miller-Rabin (witness set 2..37, exact far beyond u64).
bool is_prime_u64(u64 n);

// Largest prime < n. pre: n >= 3.
u64 prev_prime(u64 n);
// Smallest prime > n. throws std::overflow_error past 2^63.
u64 next_prime(u64 n);

// Ascending primes of [lo, hi] with an optional carry-in: the largest prime
// below lo, so gap scans never lose the pair straddling a range boundary.
class PrimeStream {
 public:
  // pre: 2 <= lo <= hi < 2^63. carry_in is set iff with_carry and lo > 2.
  PrimeStream(u64 lo, u64 hi, bool with_carry, SieveConfig cfg = {});

  const std::optional<u64>& carry_in() const { return carry_; }

  // Next prime in [lo, hi], or nullopt when exhausted.
  std::optional<u64> next();

 private:
  void refill();

  SegmentedSieve sieve_;
  u64 next_lo_, hi_;
  std::optional<u64> carry_;
  std::vector<u64> buf_;
  size_t pos_ = 0;
  bool done_ = false;
};

}  // namespace gaplab
