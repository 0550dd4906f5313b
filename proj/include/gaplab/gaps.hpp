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

#include "gaplab/sieve.hpp"

namespace gaplab {

// Consecutive primes p_prev < p_next with no prime in between.
struct PrimeGap {
  u64 p_prev = 0;
  u64 p_next = 0;
  u64 gap() const { return p_next - p_prev; }
  bool operator==(const PrimeGap&) const = default;
};

// Normalized gap sizes:
//   SqrtDiff  sqrt(p_next) - sqrt(p_prev)
//   Cramer    gap / ln^2 p_next
//   Bhp       gap / p_next^0.525
//   Ultra     gap / ln^{1+eps} p_next, eps > 0; Ultra(1) == Cramer bitwise
enum class MeritKind { SqrtDiff, Cramer, Bhp, Ultra };

struct MeritSpec {
  MeritKind kind = MeritKind::SqrtDiff;
  double epsilon = 1.0;  // Ultra only
};

// throws std::domain_error for Ultra with epsilon <= 0.
double merit_of(const PrimeGap& g, const MeritSpec& spec);

// Tokens: sqrt, cramer, bhp, ultra. throws std::invalid_argument.
MeritKind parse_merit_kind(const std::string& token);
// "sqrt" / "cramer" / "bhp" / "ultra:<epsilon>".
std::string merit_kind_token(const MeritSpec& spec);

// A gap with its merit; for running-record traces, no gap with
// p_next <= scanned_up_to has a strictly larger value.
struct GapRecord {
  PrimeGap gap;
  double value = 0;
  u64 scanned_up_to = 0;
};

struct ScanOptions {
  SieveConfig sieve;
  u64 chunk_size = u64{1} << 24;
  unsigned parallelism = 1;
};

// Every gap with lo <= p_next <= hi, ascending. Concatenating calls over a
// partition of [2, N] yields each gap of [2, N] exactly once; the pair that
// straddles a boundary belongs to the piece holding its p_next.
template <typename Fn>
void for_each_gap(u64 lo, u64 hi, Fn&& fn, SieveConfig cfg = {}) {
  PrimeStream stream(std::max<u64>(lo, 2), hi, /*with_carry=*/true, cfg);
  std::optional<u64> prev = stream.carry_in();
  while (auto p = stream.next()) {
    if (prev) fn(PrimeGap{*prev, *p});
    prev = *p;
  }
}

std::vector<PrimeGap> gap_stream(u64 lo, u64 hi, SieveConfig cfg = {});

// Gap with the maximum merit over p_next <= limit; ties go to the smallest
// p_next. pre: limit >= 3 (so at least the gap (2,3) is in range).
GapRecord max_merit(u64 limit, const MeritSpec& spec, ScanOptions opts = {});

struct MeritScan {
  // Running maxima in scan order; each entry was the best gap seen at the
  // moment its p_next was reached.
  std::vector<GapRecord> records;
  // Top rows by (value desc, p_next asc); scanned_up_to == limit on each.
  std::vector<GapRecord> top;
};

MeritScan scan_merits(u64 limit, const MeritSpec& spec, size_t top_n,
                      ScanOptions opts = {});

// Last gap below the limit with sqrt(p_next) - sqrt(p_prev) >= 1/k, and the
// first prime after it. Violations are decided on the exact integer path;
// doubles only prefilter with a 1e-9 band.
struct ThresholdResult {
  u64 k = 0;
  std::optional<PrimeGap> last_violation;
  // next_prime(last_violation.p_next), or 2 when no gap violates.
  u64 n_k = 0;
  u64 scanned_up_to = 0;
};

// pre: k >= 1, limit >= 3.
ThresholdResult find_threshold(u64 k, u64 limit, ScanOptions opts = {});

struct CramerCalibration {
  double max_ratio = 0;  // max gap / ln^2 p_next
  u64 min_integer_k = 0; // smallest integer k with max_ratio < k
  PrimeGap argmax;
  u64 scanned_up_to = 0;
};

// pre: limit >= 3.
CramerCalibration calibrate_cramer(u64 limit, ScanOptions opts = {});

// floor(x^{21/40}) = floor(x^0.525), exact. pre: x >= 1.
u64 bhp_window_width(u64 x);

// Whether [x - floor(x^0.525), x] contains a prime. pre: 3 <= x < 2^63.
bool check_bhp_window(u64 x);

}  // namespace gaplab
