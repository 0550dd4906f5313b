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

#include "gaplab/ints.hpp"

// Exact integer decision procedures. Floating point is used only as a seed
// or a prefilter; every answer here is settled by integer comparisons, so
// results are reproducible bit for bit regardless of FPU or thread count.

namespace gaplab::exact {

// Returned by the *_reaches_at threshold finders when no value below 2^63
// reaches the target; compares greater than every legal range position.
inline constexpr u64 kNever = u64{1} << 63;

// floor(sqrt(x)), exact for every u64.
u64 isqrt(u64 x);
u64 isqrt_u128(u128 x);

// floor((k/4) * sqrt(2n)) = max { m : 16 m^2 <= 2 n k^2 }.
// pre: n >= 1, 1 <= k <= 2^31.
u64 floor_quarter_k_sqrt_2n(u64 n, u64 k);

// Smallest n >= 1 with floor_quarter_k_sqrt_2n(n, k) >= m, i.e.
// ceil(8 m^2 / k^2); kNever when that lies at or beyond 2^63.
u64 quarter_k_sqrt_2n_reaches_at(u64 m, u64 k);

// floor(x^(p/q)) = max { w : w^q <= x^p }.  pre: x >= 1, p >= 1, q >= 1.
u64 floor_pow_ratio(u64 x, unsigned p, unsigned q);

// Smallest x >= 1 with floor_pow_ratio(x, p, q) >= w, i.e. x^p >= w^q;
// kNever when that lies beyond 2^63 - 1.
u64 pow_ratio_reaches_at(u64 w, unsigned p, unsigned q);

// floor(0.5 * x^(p/q)) = max { m : (2m)^q <= x^p }.
u64 floor_half_pow_ratio(u64 x, unsigned p, unsigned q);

// Smallest x >= 1 with floor_half_pow_ratio(x, p, q) >= m, or kNever.
// pre: p <= q (the fractional exponents used here).
u64 half_pow_ratio_reaches_at(u64 m, unsigned p, unsigned q);

// Exact truth of sqrt(b) - sqrt(a) >= 1/k.
// Derivation (all sides nonnegative at each squaring):
//   sqrt(b) >= sqrt(a) + 1/k
//   <=> k^2 (b - a) - 1 >= 2 k sqrt(a)      [false if LHS < 0]
//   <=> (k^2 (b - a) - 1)^2 >= 4 k^2 a
// pre: 1 <= a < b, k >= 1.
bool sqrt_gap_at_least_inv_k(u64 a, u64 b, u64 k);

// Exact truth of sqrt(b) - sqrt(a) >= t for a finite double t, via the exact
// binary decomposition t = mant * 2^e and the same squaring derivation.
// pre: 1 <= a < b, t finite.
bool sqrt_gap_at_least(u64 a, u64 b, double t);

}  // namespace gaplab::exact
