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

// Test oracle. Everything here is derived by methods independent of the
// library under test: trial division, a plain vector<bool> sieve, 50-digit
// floating point, and exact big-integer searches. Slow on purpose.

#ifndef TESTS_ORACLE_HPP_
#define TESTS_ORACLE_HPP_

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

#include "gaplab/ints.hpp"

namespace oracle {

using gaplab::u64;
using f50 = boost::multiprecision::cpp_bin_float_50;
using big = boost::multiprecision::cpp_int;

// Trial division up to sqrt(n).
bool trial_is_prime(u64 n);

// Primes in [lo, hi] by trial division. Keep ranges small.
std::vector<u64> trial_primes(u64 lo, u64 hi);

// #{p prime : a < p < b} by trial division.
u64 trial_count_open(u64 a, u64 b);

// Plain vector<bool> sieve of Eratosthenes, primes up to limit inclusive.
std::vector<u64> sieve_primes_upto(u64 limit);

// Composite/prime flags up to limit inclusive; flags[i] true iff i prime.
std::vector<bool> sieve_flags_upto(u64 limit);

// 50-digit evaluations of the bound formulas.
f50 trost_lower_f50(u64 n);   // n / (3 ln 2n)
f50 trost_upper_f50(u64 n);   // 7n / (5 ln n)
f50 prop2_value_f50(u64 n, u64 k);  // n / (k ln^2 2n)

// Exact floors by big-integer search (no floating point in the decision).
u64 floor_quarter_k_sqrt_2n(u64 n, u64 k);  // floor((k/4) sqrt(2n))
u64 floor_pow_ratio(u64 x, unsigned p, unsigned q);  // floor(x^(p/q))
u64 floor_half_pow_ratio(u64 x, unsigned p, unsigned q);

// Exact comparison sqrt(b) - sqrt(a) >= 1/k for 0 < a < b.
bool sqrt_gap_at_least_inv_k(u64 a, u64 b, u64 k);

// 50-digit merit evaluations.
f50 sqrt_diff_f50(u64 p_prev, u64 p_next);
f50 cramer_f50(u64 p_prev, u64 p_next);
f50 bhp_merit_f50(u64 p_prev, u64 p_next);
f50 ultra_f50(u64 p_prev, u64 p_next, double epsilon);

}  // namespace oracle

#endif  // TESTS_ORACLE_HPP_
