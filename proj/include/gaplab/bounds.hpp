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

// The bound family checked by the verifier, over the interval (n, 2n):
//  - trost_lower / trost_upper: n / (3 ln 2n) < pi(2n) - pi(n) < 7n / (5 ln n)
//  - bound_prop1: at least floor((k/4) sqrt(2n)) primes, for n past a
//    k-dependent threshold N_k
//  - bound_cor2:  the k = 2 instance, floor(sqrt(2n) / 2)
//  - bound_prop2: at least floor(n / (k ln^2 2n)) primes, if every prime gap
//    below 2n is under k ln^2 p
//  - bound_prop3: at least floor((2n)^{19/40} / 2) primes, unconditional for
//    large n if every interval [x - x^{21/40}, x] contains a prime
// Integer-valued bounds are decided exactly (see exact.hpp); the two real
// bounds carry a 1e-12 relative guard band with a 50-digit recheck inside it.

namespace gaplab::bounds {

// n / (3 ln 2n). pre: n >= 2.
double trost_lower(u64 n);
// 7n / (5 ln n). pre: n >= 2.
double trost_upper(u64 n);

// count > trost_lower(n), resolved at 50-digit precision when the double
// comparison lands within 1e-12 relative of equality.
bool count_above_trost_lower(u64 count, u64 n);
// count < trost_upper(n), same guard.
bool count_below_trost_upper(u64 count, u64 n);

// floor((k/4) sqrt(2n)), exact. pre: n >= 1, k >= 1.
u64 bound_prop1(u64 n, u64 k);
// floor(sqrt(2n) / 2) = bound_prop1(n, 2), exact.
u64 bound_cor2(u64 n);
// floor(n / (k ln^2 2n)); near-integer doubles are settled at 50 digits.
// pre: n >= 2, k >= 1.
u64 bound_prop2(u64 n, u64 k);
// floor((2n)^{19/40} / 2) = floor(0.5 * (2n)^0.475), exact. pre: n >= 1.
u64 bound_prop3(u64 n);

}  // namespace gaplab::bounds
