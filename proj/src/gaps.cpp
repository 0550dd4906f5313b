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

#include "gaplab/gaps.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "gaplab/exact.hpp"
#include "gaplab/parallel.hpp"

namespace gaplab {

double merit_of(const PrimeGap& g, const MeritSpec& spec) {
  auto gap = static_cast<double>(g.gap());
  auto pn = static_cast<double>(g.p_next);
  switch (spec.kind) {
    case MeritKind::SqrtDiff:
      // Equal to sqrt(p_next) - sqrt(p_prev) without the cancellation.
      return gap / (std::sqrt(pn) + std::sqrt(static_cast<double>(g.p_prev)));
    case MeritKind::Cramer:
      return gap / std::pow(std::log(pn), 2.0);
    case MeritKind::Bhp:
      return gap / std::pow(pn, 0.525);
    case MeritKind::Ultra:
      if (!(spec.epsilon > 0))
        throw std::domain_error("ultra merit: epsilon must be > 0");
      return gap / std::pow(std::log(pn), 1.0 + spec.epsilon);
  }
  throw std::invalid_argument("merit_of: unknown kind");
}

MeritKind parse_merit_kind(const std::string& token) {
  if (token == "sqrt") return MeritKind::SqrtDiff;
  if (token == "cramer") return MeritKind::Cramer;
  if (token == "bhp") return MeritKind::Bhp;
  if (token == "ultra") return MeritKind::Ultra;
  throw std::invalid_argument("unknown merit kind: " + token);
}

std::string merit_kind_token(const MeritSpec& spec) {
  switch (spec.kind) {
    case MeritKind::SqrtDiff: return "sqrt";
    case MeritKind::Cramer: return "cramer";
    case MeritKind::Bhp: return "bhp";
    case MeritKind::Ultra: {
      char buf[48];
      std::snprintf(buf, sizeof buf, "ultra:%.17g", spec.epsilon);
      return buf;
    }
  }
  throw std::invalid_argument("merit_kind_token: unknown kind");
}

std::vector<PrimeGap> gap_stream(u64 lo, u64 hi, SieveConfig cfg) {
  std::vector<PrimeGap> out;
  for_each_gap(lo, hi, [&](const PrimeGap& g) { out.push_back(g); }, cfg);
  return out;
}

namespace {

void check_scan_pre(u64 limit) {
  if (limit < 3) throw std::invalid_argument("gap scan: limit must be >= 3");
  if (limit > kMaxValue)
    throw std::overflow_error("gap scan: limit must be below 2^63");
}

void check_merit_pre(const MeritSpec& spec) {
  if (spec.kind == MeritKind::Ultra && !(spec.epsilon > 0))
    throw std::domain_error("ultra merit: epsilon must be > 0");
}

// (value, p_next) ranking used everywhere: larger value first, ties broken
// toward the smaller p_next.
bool better(double value, u64 p_next, double best_value, u64 best_p_next) {
  if (value != best_value) return value > best_value;
  return p_next < best_p_next;
}

struct MeritChunk {
  std::vector<GapRecord> records;  // chunk-local running maxima
  std::vector<GapRecord> top;      // chunk-local top rows, ranked
};

std::vector<MeritChunk> scan_chunks(u64 limit, const MeritSpec& spec,
                                    size_t top_n, const ScanOptions& opts) {
  return par::map_chunks<MeritChunk>(
      3, limit, opts.chunk_size, opts.parallelism,
      [&spec, top_n, &opts](u64 clo, u64 chi) {
        MeritChunk out;
        double best = -1;
        auto rank = [](const GapRecord& a, const GapRecord& b) {
          return better(a.value, a.gap.p_next, b.value, b.gap.p_next);
        };
        for_each_gap(
            clo, chi,
            [&](const PrimeGap& g) {
              double v = merit_of(g, spec);
              if (v > best) {
                best = v;
                out.records.push_back({g, v, g.p_next});
              }
              if (top_n > 0) {
                out.top.push_back({g, v, 0});
                if (out.top.size() >= 2 * top_n + 64) {
                  std::nth_element(out.top.begin(),
                                   out.top.begin() + top_n - 1, out.top.end(),
                                   rank);
                  out.top.resize(top_n);
                }
              }
            },
            opts.sieve);
        if (out.top.size() > top_n) {
          std::nth_element(out.top.begin(), out.top.begin() + top_n - 1,
                           out.top.end(), rank);
          out.top.resize(top_n);
        }
        return out;
      });
}

}  // namespace

GapRecord max_merit(u64 limit, const MeritSpec& spec, ScanOptions opts) {
  check_scan_pre(limit);
  check_merit_pre(spec);
  auto chunks = scan_chunks(limit, spec, 0, opts);
  GapRecord best;
  bool have = false;
  for (const auto& ch : chunks)
    for (const auto& r : ch.records)
      if (!have || r.value > best.value) {
        best = r;
        have = true;
      }
  best.scanned_up_to = limit;
  return best;
}

MeritScan scan_merits(u64 limit, const MeritSpec& spec, size_t top_n,
                      ScanOptions opts) {
  check_scan_pre(limit);
  check_merit_pre(spec);
  if (top_n < 1) throw std::invalid_argument("scan_merits: top_n must be >= 1");
  auto chunks = scan_chunks(limit, spec, top_n, opts);
  MeritScan out;
  double best = -1;
  for (auto& ch : chunks) {
    for (const auto& r : ch.records)
      if (r.value > best) {
        best = r.value;
        out.records.push_back(r);
      }
    out.top.insert(out.top.end(), ch.top.begin(), ch.top.end());
  }
  std::sort(out.top.begin(), out.top.end(),
            [](const GapRecord& a, const GapRecord& b) {
              return better(a.value, a.gap.p_next, b.value, b.gap.p_next);
            });
  if (out.top.size() > top_n) out.top.resize(top_n);
  for (auto& r : out.top) r.scanned_up_to = limit;
  return out;
}

ThresholdResult find_threshold(u64 k, u64 limit, ScanOptions opts) {
  check_scan_pre(limit);
  if (k < 1) throw std::invalid_argument("find_threshold: k must be >= 1");
  double inv_k = 1.0 / static_cast<double>(k);
  auto chunks = par::map_chunks<std::optional<PrimeGap>>(
      3, limit, opts.chunk_size, opts.parallelism,
      [k, inv_k, &opts](u64 clo, u64 chi) {
        std::optional<PrimeGap> last;
        for_each_gap(
            clo, chi,
            [&](const PrimeGap& g) {
              double v = merit_of(g, {MeritKind::SqrtDiff});
              // 1e-9 prefilter band; truth decided exactly.
              if (v + 1e-9 >= inv_k &&
                  exact::sqrt_gap_at_least_inv_k(g.p_prev, g.p_next, k))
                last = g;
            },
            opts.sieve);
        return last;
      });
  ThresholdResult res;
  res.k = k;
  res.scanned_up_to = limit;
  for (const auto& ch : chunks)
    if (ch) res.last_violation = ch;
  res.n_k = res.last_violation ? next_prime(res.last_violation->p_next) : 2;
  return res;
}

CramerCalibration calibrate_cramer(u64 limit, ScanOptions opts) {
  GapRecord best = max_merit(limit, {MeritKind::Cramer}, opts);
  CramerCalibration cal;
  cal.max_ratio = best.value;
  cal.min_integer_k = static_cast<u64>(std::floor(best.value)) + 1;
  cal.argmax = best.gap;
  cal.scanned_up_to = limit;
  return cal;
}

u64 bhp_window_width(u64 x) { return exact::floor_pow_ratio(x, 21, 40); }

bool check_bhp_window(u64 x) {
  if (x < 3) throw std::invalid_argument("check_bhp_window: x must be >= 3");
  if (x > kMaxValue)
    throw std::overflow_error("check_bhp_window: x must be below 2^63");
  u64 w = bhp_window_width(x);
  u64 lo = x - w;
  for (u64 c = x; c >= lo; --c)
    if (is_prime_u64(c)) return true;
  return false;
}

}  // namespace gaplab
