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

#include "gaplab/sieve.hpp"

#include <algorithm>
#include <stdexcept>

#include "gaplab/exact.hpp"

namespace gaplab {

Segment::Segment(u64 lo, u64 hi) : lo_(lo), hi_(hi) {
  words_.assign((size() + 63) / 64, ~u64{0});
  // Zero the tail bits past hi so count() can popcount whole words.
  u64 used = size() & 63;
  if (used) words_.back() &= (u64{1} << used) - 1;
}

void SegmentedSieve::check_upper(u64 hi) {
  if (hi > kMaxValue)
    throw std::overflow_error("sieve: upper bound must be below 2^63");
}

void SegmentedSieve::ensure_base(u64 limit) {
  if (limit <= base_limit_) return;
  u64 target = std::max<u64>({limit, base_limit_ * 2, 1024});
  // Plain bit sieve of [0, target]; target <= sqrt(2^63) < 2^32 keeps it small.
  std::vector<u64> bits((target + 64) / 64, ~u64{0});
  auto clear = [&](u64 i) { bits[i >> 6] &= ~(u64{1} << (i & 63)); };
  auto test = [&](u64 i) { return (bits[i >> 6] >> (i & 63)) & 1; };
  clear(0);
  if (target >= 1) clear(1);
  for (u64 p = 2; p * p <= target; ++p)
    if (test(p))
      for (u64 m = p * p; m <= target; m += p) clear(m);
  base_.clear();
  for (u64 p = 2; p <= target; ++p)
    if (test(p)) base_.push_back(static_cast<u32>(p));
  base_limit_ = target;
}

Segment SegmentedSieve::segment(u64 lo, u64 hi) {
  if (lo < 2) throw std::invalid_argument("sieve: lo must be >= 2");
  if (lo > hi) throw std::invalid_argument("sieve: lo must be <= hi");
  check_upper(hi);
  if (hi - lo + 1 > cfg_.segment_size)
    throw std::length_error("sieve: range exceeds segment_size");
  ensure_base(exact::isqrt(hi));
  Segment seg(lo, hi);
  for (u32 p : base_) {
    u64 pp = static_cast<u64>(p) * p;
    if (pp > hi) break;
    u64 start = std::max(pp, (lo + p - 1) / p * static_cast<u64>(p));
    for (u64 m = start; m <= hi; m += p) seg.clear(m);
  }
  return seg;
}

u64 SegmentedSieve::count_open(u64 a, u64 b) {
  if (a > b) throw std::invalid_argument("count_primes_open: need a <= b");
  check_upper(b);
  if (b <= a + 1) return 0;
  u64 lo = std::max<u64>(a + 1, 2), hi = b - 1;
  if (lo > hi) return 0;
  u64 total = 0;
  for (u64 wlo = lo;;) {
    u64 whi = wlo + std::min(hi - wlo, cfg_.segment_size - 1);
    total += segment(wlo, whi).count();
    if (whi >= hi) return total;
    wlo = whi + 1;
  }
}

Segment sieve_segment(u64 lo, u64 hi, SieveConfig cfg) {
  return SegmentedSieve(cfg).segment(lo, hi);
}

u64 count_primes_open(u64 a, u64 b, SieveConfig cfg) {
  return SegmentedSieve(cfg).count_open(a, b);
}

namespace {

u64 mulmod(u64 a, u64 b, u64 m) {
  return static_cast<u64>(static_cast<u128>(a) * b % m);
}

u64 powmod(u64 b, u64 e, u64 m) {
  u64 r = 1;
  b %= m;
  while (e) {
    if (e & 1) r = mulmod(r, b, m);
    b = mulmod(b, b, m);
    e >>= 1;
  }
  return r;
}

constexpr u64 kWitnesses[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

}  // namespace

bool is_prime_u64(u64 n) {
  if (n < 2) return false;
  for (u64 p : kWitnesses) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  u64 d = n - 1;
  int r = std::countr_zero(d);
  d >>= r;
  for (u64 a : kWitnesses) {
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < r; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

u64 prev_prime(u64 n) {
  if (n <= 2) throw std::invalid_argument("prev_prime: no prime below 2");
  for (u64 c = n - 1;; --c)
    if (is_prime_u64(c)) return c;
}

u64 next_prime(u64 n) {
  for (u64 c = n + 1; c <= kMaxValue; ++c)
    if (is_prime_u64(c)) return c;
  throw std::overflow_error("next_prime: no prime below 2^63 past n");
}

PrimeStream::PrimeStream(u64 lo, u64 hi, bool with_carry, SieveConfig cfg)
    : sieve_(cfg), next_lo_(std::max<u64>(lo, 2)), hi_(hi) {
  if (lo < 2) throw std::invalid_argument("prime_stream: lo must be >= 2");
  if (lo > hi) throw std::invalid_argument("prime_stream: lo must be <= hi");
  if (hi > kMaxValue)
    throw std::overflow_error("prime_stream: hi must be below 2^63");
  if (with_carry && lo > 2) carry_ = prev_prime(lo);
}

void PrimeStream::refill() {
  buf_.clear();
  pos_ = 0;
  while (buf_.empty()) {
    if (next_lo_ > hi_) {
      done_ = true;
      return;
    }
    u64 whi = next_lo_ + std::min(hi_ - next_lo_,
                                  sieve_.config().segment_size - 1);
    sieve_.segment(next_lo_, whi)
        .for_each_prime([this](u64 p) { buf_.push_back(p); });
    if (whi >= hi_) {
      done_ = buf_.empty();
      next_lo_ = hi_ + 1;
      return;
    }
    next_lo_ = whi + 1;
  }
}

std::optional<u64> PrimeStream::next() {
  if (pos_ >= buf_.size()) {
    if (done_) return std::nullopt;
    refill();
    if (pos_ >= buf_.size()) return std::nullopt;
  }
  return buf_[pos_++];
}

}  // namespace gaplab
