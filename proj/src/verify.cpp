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

#include "gaplab/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <stdexcept>

#include "gaplab/bounds.hpp"
#include "gaplab/exact.hpp"
#include "gaplab/parallel.hpp"

namespace gaplab {

namespace {

u64 parse_u64(const std::string& s) {
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
    throw std::invalid_argument("claim: bad integer '" + s + "'");
  return std::stoull(s);
}

double parse_real(const std::string& s) {
  size_t used = 0;
  double v;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument("claim: bad real '" + s + "'");
  }
  if (used != s.size() || !std::isfinite(v))
    throw std::invalid_argument("claim: bad real '" + s + "'");
  return v;
}

}  // namespace

Claim Claim::parse(const std::string& text, std::optional<double> epsilon) {
  std::vector<std::string> parts;
  size_t start = 0;
  for (size_t i = 0; i <= text.size(); ++i)
    if (i == text.size() || text[i] == ':') {
      parts.push_back(text.substr(start, i - start));
      start = i + 1;
    }
  Claim c;
  const std::string& head = parts[0];
  if (head == "trost" || head == "bertrand" || head == "cor2" ||
      head == "prop3") {
    if (parts.size() != 1)
      throw std::invalid_argument("claim: " + head + " takes no parameters");
    c.id = head == "trost"      ? ClaimId::Trost
           : head == "bertrand" ? ClaimId::Bertrand
           : head == "cor2"     ? ClaimId::Cor2
                                : ClaimId::Prop3;
    return c;
  }
  if (head == "prop1" || head == "prop2") {
    if (parts.size() > 2)
      throw std::invalid_argument("claim: " + head + " takes one parameter");
    c.id = head == "prop1" ? ClaimId::Prop1 : ClaimId::Prop2;
    c.k = parts.size() == 2 ? parse_u64(parts[1]) : 1;
    if (c.k < 1 || c.k > (u64{1} << 31))
      throw std::invalid_argument("claim: need 1 <= k <= 2^31");
    return c;
  }
  if (head == "gap") {
    if (parts.size() != 3)
      throw std::invalid_argument("claim: expected gap:kind:bound");
    c.id = ClaimId::GapMerit;
    c.merit.kind = parse_merit_kind(parts[1]);
    if (c.merit.kind == MeritKind::Ultra) {
      if (!epsilon)
        throw std::invalid_argument("claim: gap:ultra requires an epsilon");
      if (!(*epsilon > 0))
        throw std::invalid_argument("claim: epsilon must be > 0");
      c.merit.epsilon = *epsilon;
    }
    c.gap_bound = parse_real(parts[2]);
    return c;
  }
  throw std::invalid_argument("unknown claim: " + text);
}

std::string Claim::label() const {
  switch (id) {
    case ClaimId::Trost: return "trost";
    case ClaimId::Bertrand: return "bertrand";
    case ClaimId::Cor2: return "cor2";
    case ClaimId::Prop1: return "prop1";
    case ClaimId::Prop2: return "prop2";
    case ClaimId::Prop3: return "prop3";
    case ClaimId::BhpWindow: return "bhp-window";
    case ClaimId::GapMerit: return "gap";
  }
  return "?";
}

namespace {

// Trial-division primality, independent of the sieve and Miller-Rabin paths;
// the self-audit must not share code with what it audits.
bool trial_prime(u64 v) {
  if (v < 2) return false;
  if (v % 2 == 0) return v == 2;
  for (u64 d = 3; d * d <= v; d += 2)
    if (v % d == 0) return false;
  return true;
}

u64 trial_count_open(u64 a, u64 b) {
  u64 c = 0;
  for (u64 v = a + 1; v + 1 <= b && v != 0; ++v) c += trial_prime(v);
  return c;
}

[[noreturn]] void audit_failure(const char* what, u64 n) {
  throw std::logic_error(std::string("self-audit failed for ") + what +
                         " at n=" + std::to_string(n));
}

// Primality bits over [lo, hi] assembled from sieve segments; lo > hi means
// an empty window (every test yields 0).
class BitWindow {
 public:
  BitWindow(SegmentedSieve& sieve, u64 lo, u64 hi)
      : lo_(lo), hi_(hi), seg_size_(sieve.config().segment_size) {
    if (lo_ > hi_) return;
    for (u64 wlo = lo_;;) {
      u64 whi = wlo + std::min(hi_ - wlo, seg_size_ - 1);
      segs_.push_back(sieve.segment(wlo, whi));
      if (whi >= hi_) return;
      wlo = whi + 1;
    }
  }

  u64 test(u64 v) const {
    if (v < lo_ || v > hi_) return 0;
    return segs_[(v - lo_) / seg_size_].test(v) ? 1 : 0;
  }

 private:
  u64 lo_, hi_, seg_size_;
  std::vector<Segment> segs_;
};

struct ChunkOut {
  std::vector<BoundCheckRow> violations;
  u64 rows = 0;
  std::optional<u64> last_bad_n;
};

// Exact integer bounds are non-decreasing step functions of n; tracking the
// next crossing makes the per-n cost O(1).
struct SteppedBound {
  u64 m = 0;
  u64 next_n = 0;
};

ChunkOut count_chunk(const Claim& cl, std::optional<u64> premise, u64 a, u64 b,
                     const VerifyOptions& opts) {
  ChunkOut out;
  SegmentedSieve sieve(opts.sieve);
  // c: interval is (n, 2n + c); Bertrand uses (n, 2n - 2).
  const i64 c = cl.id == ClaimId::Bertrand ? -2 : 0;
  const u64 uc = static_cast<u64>(c);

  SteppedBound step;
  auto step_next = [&](u64 m) {
    switch (cl.id) {
      case ClaimId::Prop1:
        return exact::quarter_k_sqrt_2n_reaches_at(m, cl.k);
      case ClaimId::Cor2:
        return exact::quarter_k_sqrt_2n_reaches_at(m, 2);
      case ClaimId::Prop3: {
        u64 x = exact::half_pow_ratio_reaches_at(m, 19, 40);
        return x >= exact::kNever ? exact::kNever : (x + 1) / 2;
      }
      default:
        return exact::kNever;
    }
  };
  bool stepped = cl.id == ClaimId::Prop1 || cl.id == ClaimId::Cor2 ||
                 cl.id == ClaimId::Prop3;
  if (stepped) {
    step.m = cl.id == ClaimId::Prop3 ? bounds::bound_prop3(a)
                                     : bounds::bound_prop1(a, cl.id == ClaimId::Cor2 ? 2 : cl.k);
    step.next_n = step_next(step.m + 1);
  }

  auto fail = [&](u64 n, u64 cnt, double bound_value) {
    bool in_premise = !premise || n > *premise;
    if (!in_premise) return;
    out.last_bad_n = n;
    if (!opts.collect_violations) return;
    if (opts.self_audit && trial_count_open(n, 2 * n + uc) != cnt)
      audit_failure("count claim", n);
    out.violations.push_back(
        {n, 0, static_cast<double>(cnt), bound_value, false});
  };

  auto process = [&](u64 n, u64 cnt) {
    ++out.rows;
    switch (cl.id) {
      case ClaimId::Trost:
        if (!bounds::count_above_trost_lower(cnt, n))
          fail(n, cnt, bounds::trost_lower(n));
        if (!bounds::count_below_trost_upper(cnt, n))
          fail(n, cnt, bounds::trost_upper(n));
        break;
      case ClaimId::Bertrand:
        if (cnt < 2) fail(n, cnt, 2.0);
        break;
      case ClaimId::Prop1:
      case ClaimId::Cor2:
      case ClaimId::Prop3:
        while (n >= step.next_n) {
          ++step.m;
          step.next_n = step_next(step.m + 1);
        }
        if (cnt < step.m) fail(n, cnt, static_cast<double>(step.m));
        break;
      case ClaimId::Prop2: {
        u64 bp = bounds::bound_prop2(n, cl.k);
        if (cnt < bp) fail(n, cnt, static_cast<double>(bp));
        break;
      }
      default:
        throw std::logic_error("count_chunk: not a count claim");
    }
  };

  // The sliding identity needs 2n + c - 1 >= n, i.e. n >= 1 - c; earlier n
  // (only Bertrand's n = 2) are counted directly.
  u64 slide_from = std::max(a, static_cast<u64>(1 - c));
  for (u64 n = a; n < slide_from && n <= b; ++n)
    process(n, sieve.count_open(n, 2 * n + uc));
  if (slide_from <= b) {
    u64 s = slide_from;
    BitWindow left(sieve, s + 1, b);
    BitWindow right(sieve, 2 * s + uc, 2 * b + uc - 1);
    u64 cnt = sieve.count_open(s, 2 * s + uc);
    for (u64 n = s;; ++n) {
      process(n, cnt);
      if (n == b) break;
      cnt += right.test(2 * n + uc) + right.test(2 * n + uc + 1);
      cnt -= left.test(n + 1);
    }
  }
  return out;
}

ChunkOut gap_chunk(const Claim& cl, u64 lo, u64 hi,
                   const VerifyOptions& opts) {
  ChunkOut out;
  for_each_gap(
      lo, hi,
      [&](const PrimeGap& g) {
        ++out.rows;
        double v = merit_of(g, cl.merit);
        bool viol;
        if (cl.merit.kind == MeritKind::SqrtDiff) {
          viol = v + 1e-9 >= cl.gap_bound &&
                 exact::sqrt_gap_at_least(g.p_prev, g.p_next, cl.gap_bound);
        } else {
          viol = v >= cl.gap_bound;
        }
        if (!viol) return;
        out.last_bad_n = g.p_next;
        if (!opts.collect_violations) return;
        if (opts.self_audit &&
            (!trial_prime(g.p_prev) || !trial_prime(g.p_next) ||
             trial_count_open(g.p_prev, g.p_next) != 0))
          audit_failure("gap claim", g.p_next);
        out.violations.push_back({g.p_next, g.p_prev, v, cl.gap_bound, false});
      },
      opts.sieve);
  return out;
}

ChunkOut window_chunk(u64 a, u64 b, const VerifyOptions& opts) {
  ChunkOut out;
  SegmentedSieve sieve(opts.sieve);
  BitWindow bits(sieve, a, b);
  u64 last_prime = prev_prime(a + 1);  // largest prime <= a
  u64 w = exact::floor_pow_ratio(a, 21, 40);
  u64 next_x = exact::pow_ratio_reaches_at(w + 1, 21, 40);
  for (u64 x = a; x <= b; ++x) {
    if (bits.test(x)) last_prime = x;
    while (x >= next_x) {
      ++w;
      next_x = exact::pow_ratio_reaches_at(w + 1, 21, 40);
    }
    ++out.rows;
    if (last_prime >= x - w) continue;
    out.last_bad_n = x;
    if (!opts.collect_violations) continue;
    if (opts.self_audit && trial_count_open(x - w - 1, x + 1) != 0)
      audit_failure("window claim", x);
    out.violations.push_back({x, 0, 0.0, 1.0, false});
  }
  return out;
}

void check_range(const Claim& cl, u64 n_lo, u64 n_hi) {
  u64 min_lo = cl.id == ClaimId::BhpWindow ? 3 : 2;
  if (n_lo < min_lo)
    throw std::invalid_argument("verify: range must start at " +
                                std::to_string(min_lo) + " or later");
  if (n_lo > n_hi) throw std::invalid_argument("verify: need n_lo <= n_hi");
  bool count_claim = cl.id != ClaimId::GapMerit && cl.id != ClaimId::BhpWindow;
  if (n_hi > (count_claim ? kMaxValue / 2 : kMaxValue))
    throw std::overflow_error("verify: range upper bound too large");
}

}  // namespace

VerificationReport verify_claim(const Claim& claim, u64 n_lo, u64 n_hi,
                                VerifyOptions opts) {
  check_range(claim, n_lo, n_hi);
  if (claim.id == ClaimId::GapMerit && claim.merit.kind == MeritKind::Ultra &&
      !(claim.merit.epsilon > 0))
    throw std::domain_error("verify: ultra merit needs epsilon > 0");
  auto t0 = std::chrono::steady_clock::now();

  VerificationReport rep;
  rep.claim = claim;
  rep.n_lo = n_lo;
  rep.n_hi = n_hi;

  std::optional<u64> premise;
  if (opts.premise_gating) {
    switch (claim.id) {
      case ClaimId::Prop1:
        premise = claim.premise_n
                      ? *claim.premise_n
                      : find_threshold(claim.k, 2 * n_hi,
                                       {opts.sieve, opts.chunk_size,
                                        opts.parallelism})
                            .n_k;
        break;
      case ClaimId::Prop2:
        premise = claim.premise_n.value_or(2);
        break;
      case ClaimId::Prop3:
        premise = claim.premise_n.value_or(0);
        break;
      default:
        break;
    }
    rep.claim.premise_n = premise;
  }

  auto chunks = par::map_chunks<ChunkOut>(
      n_lo, n_hi, opts.chunk_size, opts.parallelism,
      [&](u64 a, u64 b) {
        switch (claim.id) {
          case ClaimId::GapMerit:
            return gap_chunk(claim, a, b, opts);
          case ClaimId::BhpWindow:
            return window_chunk(a, b, opts);
          default:
            return count_chunk(claim, premise, a, b, opts);
        }
      });

  std::optional<u64> last_bad;
  for (auto& ch : chunks) {
    rep.rows_checked += ch.rows;
    rep.violations.insert(rep.violations.end(), ch.violations.begin(),
                          ch.violations.end());
    if (ch.last_bad_n) last_bad = ch.last_bad_n;
  }
  if (!last_bad)
    rep.minimal_valid_n = n_lo;
  else if (*last_bad < n_hi)
    rep.minimal_valid_n = *last_bad + 1;

  rep.wall_time_ms = static_cast<u64>(
      std::chrono::duration_cast<std::chrono::milliseconds>(
          std::chrono::steady_clock::now() - t0)
          .count());
  return rep;
}

std::optional<u64> find_minimal_n(const Claim& claim, u64 n_hi,
                                  VerifyOptions opts) {
  if (n_hi < 2) throw std::invalid_argument("find_minimal_n: need n_hi >= 2");
  opts.premise_gating = false;
  opts.collect_violations = false;
  u64 lo = claim.id == ClaimId::BhpWindow ? 3 : 2;
  return verify_claim(claim, lo, n_hi, opts).minimal_valid_n;
}

VerificationReport verify_gap_condition(const MeritSpec& spec,
                                        double bound_value, u64 lo, u64 hi,
                                        VerifyOptions opts) {
  if (!std::isfinite(bound_value))
    throw std::invalid_argument("verify_gap_condition: bound must be finite");
  Claim c;
  c.id = ClaimId::GapMerit;
  c.merit = spec;
  c.gap_bound = bound_value;
  return verify_claim(c, lo, hi, opts);
}

}  // namespace gaplab
