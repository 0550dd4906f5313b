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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>
#include <vector>

#include "gaplab/sieve.hpp"
#include "oracle.hpp"

using namespace gaplab;

namespace {

std::vector<u64> collect(const Segment& seg) {
  std::vector<u64> out;
  seg.for_each_prime([&](u64 p) { out.push_back(p); });
  return out;
}

std::vector<u64> collect_range(SegmentedSieve& sieve, u64 lo, u64 hi) {
  std::vector<u64> out;
  sieve.for_each_prime(lo, hi, [&](u64 p) { out.push_back(p); });
  return out;
}

}  // namespace

TEST_CASE("segments over small frozen windows") {
  Segment a = sieve_segment(2, 12);
  CHECK(collect(a) == std::vector<u64>{2, 3, 5, 7, 11});
  CHECK(a.count() == 5);
  CHECK(a.test(2));
  CHECK(a.test(11));
  CHECK(!a.test(9));
  CHECK(!a.test(12));

  CHECK(sieve_segment(14, 16).count() == 0);
  CHECK(collect(sieve_segment(2, 2)) == std::vector<u64>{2});
  CHECK(collect(sieve_segment(23, 23)) == std::vector<u64>{23});
  CHECK(sieve_segment(25, 25).count() == 0);
  CHECK(collect(sieve_segment(89, 97)) == std::vector<u64>{89, 97});
}

TEST_CASE("segment argument validation") {
  SegmentedSieve sieve;
  CHECK_THROWS_AS(sieve.segment(1, 5), std::invalid_argument);
  CHECK_THROWS_AS(sieve.segment(0, 5), std::invalid_argument);
  CHECK_THROWS_AS(sieve.segment(10, 5), std::invalid_argument);
  CHECK_THROWS_AS(sieve.segment(2, u64{1} << 63), std::overflow_error);
  CHECK_THROWS_AS(sieve.segment(2, 2 + sieve.config().segment_size),
                  std::length_error);

  SegmentedSieve tiny({64});
  CHECK_THROWS_AS(tiny.segment(100, 164), std::length_error);
  CHECK(tiny.segment(100, 163).count() == 13);  // pi(163) - pi(99)
}

TEST_CASE("segments agree with trial division") {
  SegmentedSieve sieve;
  CHECK(collect_range(sieve, 2, 100000) == oracle::sieve_primes_upto(100000));
  CHECK(collect(sieve.segment(99950, 100100)) ==
        oracle::trial_primes(99950, 100100));

  // A window far beyond the base-prime cache forces cache growth.
  u64 lo = 10000000000ULL;
  CHECK(collect(sieve.segment(lo, lo + 300)) ==
        oracle::trial_primes(lo, lo + 300));
}

TEST_CASE("segment size never changes what is enumerated") {
  std::vector<u64> expect = oracle::sieve_primes_upto(30000);
  for (u64 size : {u64{64}, u64{192}, u64{4096}, SieveConfig{}.segment_size}) {
    SegmentedSieve sieve({size});
    CHECK(collect_range(sieve, 2, 30000) == expect);
  }
}

TEST_CASE("count_open counts strictly between its endpoints") {
  SieveConfig cfg;
  CHECK(count_primes_open(50, 100, cfg) == 10);
  CHECK(count_primes_open(8, 14, cfg) == 2);
  CHECK(count_primes_open(3, 4, cfg) == 0);
  CHECK(count_primes_open(10, 100, cfg) == 21);
  CHECK(count_primes_open(2, 2, cfg) == 0);
  CHECK(count_primes_open(7, 8, cfg) == 0);
  CHECK(count_primes_open(1, 1000001, cfg) == 78498);  // pi(10^6)

  // Endpoints are excluded: 7 and 11 do not count themselves.
  CHECK(count_primes_open(7, 11, cfg) == 0);
  CHECK(count_primes_open(6, 12, cfg) == 2);
}

TEST_CASE("count_open is additive with a prime-endpoint correction") {
  SegmentedSieve sieve;
  for (u64 a : {u64{2}, u64{10}, u64{97}, u64{1000}})
    for (u64 b : {a + 1, a + 7, a + 100})
      for (u64 c : {b + 1, b + 50, b + 1000}) {
        u64 split = sieve.count_open(a, b) + sieve.count_open(b, c) +
                    (oracle::trial_is_prime(b) ? 1 : 0);
        CHECK(sieve.count_open(a, c) == split);
        CHECK(sieve.count_open(a, c) == oracle::trial_count_open(a, c));
      }
}

TEST_CASE("deterministic Miller-Rabin on 64-bit facts") {
  CHECK(!is_prime_u64(0));
  CHECK(!is_prime_u64(1));
  CHECK(is_prime_u64(2));
  CHECK(is_prime_u64(3));
  CHECK(!is_prime_u64(4));
  CHECK(is_prime_u64(492113));
  CHECK(is_prime_u64(2305843009213693951ULL));     // 2^61 - 1
  CHECK(is_prime_u64(1000000000000000009ULL));
  CHECK(is_prime_u64(9223372036854775783ULL));     // largest prime < 2^63
  CHECK(!is_prime_u64(9223372036854775807ULL));    // 2^63 - 1 = 7*73*...
  CHECK(!is_prime_u64(3215031751ULL));  // strong pseudoprime to 2,3,5,7
  CHECK(!is_prime_u64(~u64{0}));

  for (u64 v = 0; v <= 50000; ++v)
    CHECK(is_prime_u64(v) == oracle::trial_is_prime(v));
}

TEST_CASE("prev_prime finds the largest prime below n") {
  CHECK(prev_prime(3) == 2);
  CHECK(prev_prime(4) == 3);
  CHECK(prev_prime(127) == 113);
  CHECK(prev_prime(128) == 127);
  CHECK(prev_prime(1000000) == 999983);
  CHECK_THROWS_AS(prev_prime(2), std::invalid_argument);
  CHECK_THROWS_AS(prev_prime(0), std::invalid_argument);
}

TEST_CASE("next_prime finds the smallest prime above n") {
  CHECK(next_prime(0) == 2);
  CHECK(next_prime(1) == 2);
  CHECK(next_prime(2) == 3);
  CHECK(next_prime(113) == 127);
  CHECK(next_prime(999983) == 1000003);
  CHECK_THROWS_AS(next_prime(9223372036854775783ULL), std::overflow_error);
}

TEST_CASE("prime streams walk a range in order, with optional carry") {
  PrimeStream plain(90, 120, /*with_carry=*/false);
  CHECK(!plain.carry_in().has_value());
  std::vector<u64> got;
  while (auto p = plain.next()) got.push_back(*p);
  CHECK(got == std::vector<u64>{97, 101, 103, 107, 109, 113});

  PrimeStream carried(90, 120, /*with_carry=*/true);
  REQUIRE(carried.carry_in().has_value());
  CHECK(*carried.carry_in() == 89);
  got.clear();
  while (auto p = carried.next()) got.push_back(*p);
  CHECK(got == std::vector<u64>{97, 101, 103, 107, 109, 113});

  // A window holding no primes still reports the carry.
  PrimeStream empty(24, 28, /*with_carry=*/true);
  REQUIRE(empty.carry_in().has_value());
  CHECK(*empty.carry_in() == 23);
  CHECK(!empty.next().has_value());

  // No carry exists below the first prime.
  PrimeStream first(2, 2, /*with_carry=*/true);
  CHECK(!first.carry_in().has_value());
  CHECK(*first.next() == 2);
  CHECK(!first.next().has_value());

  CHECK_THROWS_AS(PrimeStream(1, 5, false), std::invalid_argument);
  CHECK_THROWS_AS(PrimeStream(10, 5, false), std::invalid_argument);
  CHECK_THROWS_AS(PrimeStream(2, u64{1} << 63, false), std::overflow_error);
}

TEST_CASE("prime streams are segment-size independent") {
  std::vector<u64> expect = oracle::sieve_primes_upto(10000);
  for (u64 size : {u64{64}, u64{1024}}) {
    PrimeStream s(2, 10000, false, {size});
    std::vector<u64> got;
    while (auto p = s.next()) got.push_back(*p);
    CHECK(got == expect);
  }
}
