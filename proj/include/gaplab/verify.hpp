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

#include <optional>
#include <string>
#include <vector>

#include "gaplab/gaps.hpp"

namespace gaplab {

// Verifiable claims. Count claims assert a lower (and for Trost also an
// upper) bound on the number of primes in (n, 2n) -- (n, 2n-2) for Bertrand.
// GapMerit asserts every gap merit stays below a bound; BhpWindow asserts
// every window [x - floor(x^0.525), x] contains a prime.
enum class ClaimId {
  Trost,     // n / (3 ln 2n) < count < 7n / (5 ln n)
  Bertrand,  // count over (n, 2n-2) >= 2
  Cor2,      // count >= floor(sqrt(2n) / 2)
  Prop1,     // count >= floor((k/4) sqrt(2n)) for n > N_k
  Prop2,     // count >= floor(n / (k ln^2 2n)) for n > N
  Prop3,     // count >= floor((2n)^0.475 / 2) for n > C
  BhpWindow, // prime in [x - floor(x^0.525), x]
  GapMerit,  // merit(gap) < bound for every gap
};

struct Claim {
  ClaimId id = ClaimId::Trost;
  u64 k = 1;                     // Prop1 / Prop2
  std::optional<u64> premise_n;  // Prop1: N_k; Prop2: N; Prop3: C
  MeritSpec merit;               // GapMerit
  double gap_bound = 1.0;        // GapMerit

  // Grammar: trost | bertrand | cor2 | prop1[:k] | prop2[:k] | prop3 |
  // gap:kind:bound with kind in {sqrt, cramer, bhp, ultra}; ultra requires
  // an epsilon. throws std::invalid_argument.
  static Claim parse(const std::string& text,
                     std::optional<double> epsilon = std::nullopt);

  std::string label() const;  // "trost", ..., "gap", "bhp-window"
};

// One checked position. Count claims: n with actual = count, bound = the
// bound value. Gap claims: n = p_next, actual = merit. Window claims: n = x,
// actual = primes found (0 on violation), bound = 1.
struct BoundCheckRow {
  u64 n = 0;
  u64 p_prev = 0;  // gap claims only
  double actual = 0;
  double bound = 0;
  bool holds = true;
  bool operator==(const BoundCheckRow&) const = default;
};

struct VerificationReport {
  Claim claim;
  u64 n_lo = 0, n_hi = 0;
  u64 rows_checked = 0;
  std::vector<BoundCheckRow> violations;
  // Smallest n in range with no violation at any n' >= n; absent when the
  // last checked position violates.
  std::optional<u64> minimal_valid_n;
  u64 wall_time_ms = 0;
};

struct VerifyOptions {
  SieveConfig sieve;
  u64 chunk_size = u64{1} << 20;
  unsigned parallelism = 1;
  // Conclusion failures at n <= premise are out-of-premise, not violations.
  bool premise_gating = true;
  // Re-derive every violation by trial division before reporting.
  bool self_audit = true;
  // find_minimal_n turns this off to track only the last failing n.
  bool collect_violations = true;
};

// Checks the claim for every position in [n_lo, n_hi] (n for count claims,
// p_next for gap claims, x for window claims). For Prop1 with premise gating
// and no explicit N_k, the premise is first computed by
// find_threshold(k, 2 * n_hi). Deterministic for any chunk_size/parallelism.
// throws std::invalid_argument / std::overflow_error on bad ranges.
VerificationReport verify_claim(const Claim& claim, u64 n_lo, u64 n_hi,
                                VerifyOptions opts = {});

// Smallest n <= n_hi such that the claim's conclusion (premise ignored)
// holds for every n' in [n, n_hi]; absent when n_hi itself fails.
std::optional<u64> find_minimal_n(const Claim& claim, u64 n_hi,
                                  VerifyOptions opts = {});

// Reports every gap with p_next in [lo, hi] whose merit >= bound_value.
// SqrtDiff violations are decided on the exact integer path.
VerificationReport verify_gap_condition(const MeritSpec& spec,
                                        double bound_value, u64 lo, u64 hi,
                                        VerifyOptions opts = {});

}  // namespace gaplab
