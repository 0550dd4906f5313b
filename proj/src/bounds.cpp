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

#include "gaplab/bounds.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <cmath>
#include <stdexcept>

#include "gaplab/exact.hpp"

namespace gaplab::bounds {

namespace {

using f50 = boost::multiprecision::cpp_bin_float_50;

constexpr double kGuard = 1e-12;

f50 trost_lower_f50(u64 n) { return f50(n) / (3 * log(f50(2) * n)); }
f50 trost_upper_f50(u64 n) { return 7 * f50(n) / (5 * log(f50(n))); }

bool within_guard(double x, double y) {
  return std::abs(x - y) <= kGuard * std::max(std::abs(x), std::abs(y));
}

void check_trost_domain(u64 n) {
  if (n < 2) throw std::domain_error("trost bounds: need n >= 2");
}

}  // namespace

double trost_lower(u64 n) {
  check_trost_domain(n);
  return static_cast<double>(n) / (3.0 * std::log(2.0 * static_cast<double>(n)));
}

double trost_upper(u64 n) {
  check_trost_domain(n);
  return 7.0 * static_cast<double>(n) / (5.0 * std::log(static_cast<double>(n)));
}

bool count_above_trost_lower(u64 count, u64 n) {
  double b = trost_lower(n);
  auto c = static_cast<double>(count);
  if (within_guard(c, b)) return f50(count) > trost_lower_f50(n);
  return c > b;
}

bool count_below_trost_upper(u64 count, u64 n) {
  double b = trost_upper(n);
  auto c = static_cast<double>(count);
  if (within_guard(c, b)) return f50(count) < trost_upper_f50(n);
  return c < b;
}

u64 bound_prop1(u64 n, u64 k) { return exact::floor_quarter_k_sqrt_2n(n, k); }

u64 bound_cor2(u64 n) { return bound_prop1(n, 2); }

u64 bound_prop2(u64 n, u64 k) {
  if (n < 2) throw std::domain_error("bound_prop2: need n >= 2");
  if (k < 1) throw std::domain_error("bound_prop2: need k >= 1");
  double l = std::log(2.0 * static_cast<double>(n));
  double v = static_cast<double>(n) / (static_cast<double>(k) * l * l);
  double f = std::floor(v);
  // A double landing within the guard band of an integer could floor wrong;
  // recompute those at 50 digits.
  if (within_guard(v, f) || within_guard(v, f + 1.0)) {
    f50 ll = log(f50(2) * n);
    f50 vv = f50(n) / (f50(k) * ll * ll);
    return static_cast<u64>(floor(vv));
  }
  return static_cast<u64>(f);
}

u64 bound_prop3(u64 n) {
  if (n < 1) throw std::domain_error("bound_prop3: need n >= 1");
  if (n > (kMaxValue >> 1))
    throw std::overflow_error("bound_prop3: 2n must be below 2^63");
  return exact::floor_half_pow_ratio(2 * n, 19, 40);
}

}  // namespace gaplab::bounds
