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

#include "gaplab/exact.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <stdexcept>

namespace gaplab::exact {

using boost::multiprecision::cpp_int;

u64 isqrt(u64 x) {
  if (x == 0) return 0;
  u64 r = static_cast<u64>(std::sqrt(static_cast<double>(x)));
  while (r > 0 && static_cast<u128>(r) * r > x) --r;
  while (static_cast<u128>(r + 1) * (r + 1) <= x) ++r;
  return r;
}

u64 isqrt_u128(u128 x) {
  if (x == 0) return 0;
  u64 r = static_cast<u64>(std::sqrt(static_cast<long double>(x)));
  // r^2 and (r+1)^2 stay below 2^128 for all inputs used here (x < 2^126).
  while (r > 0 && static_cast<u128>(r) * r > x) --r;
  while (static_cast<u128>(r + 1) * (r + 1) <= x) ++r;
  return r;
}

u64 floor_quarter_k_sqrt_2n(u64 n, u64 k) {
  if (n < 1 || k < 1 || k > (u64{1} << 31))
    throw std::domain_error("floor_quarter_k_sqrt_2n: need n >= 1, 1 <= k <= 2^31");
  // 16 m^2 <= 2 n k^2  <=>  m^2 <= floor(2 n k^2 / 16).
  u128 t = static_cast<u128>(2) * n * k * k;
  return isqrt_u128(t >> 4);
}

u64 quarter_k_sqrt_2n_reaches_at(u64 m, u64 k) {
  if (k < 1 || k > (u64{1} << 31))
    throw std::domain_error("quarter_k_sqrt_2n_reaches_at: need 1 <= k <= 2^31");
  if (m == 0) return 1;
  // With k <= 2^31, m >= 2^62 forces 8 m^2 / k^2 >= 2^65; also keeps 8 m^2
  // inside u128.
  if (m >= (u64{1} << 62)) return kNever;
  u128 num = static_cast<u128>(8) * m * m;
  u128 kk = static_cast<u128>(k) * k;
  u128 n = (num + kk - 1) / kk;
  if (n > static_cast<u128>(kMaxValue)) return kNever;
  return n < 1 ? 1 : static_cast<u64>(n);
}

namespace {

cpp_int ipow(u64 base, unsigned e) {
  cpp_int r = 1, b = base;
  while (e) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

}  // namespace

u64 floor_pow_ratio(u64 x, unsigned p, unsigned q) {
  if (x < 1 || p < 1 || q < 1)
    throw std::domain_error("floor_pow_ratio: need x >= 1, p >= 1, q >= 1");
  cpp_int xp = ipow(x, p);
  // Double seed, then settle w^q <= x^p exactly.
  u64 w = static_cast<u64>(
      std::pow(static_cast<double>(x), static_cast<double>(p) / q));
  if (w < 1) w = 1;
  while (ipow(w, q) > xp) --w;
  while (ipow(w + 1, q) <= xp) ++w;
  return w;
}

u64 pow_ratio_reaches_at(u64 w, unsigned p, unsigned q) {
  if (w < 1 || p < 1 || q < 1)
    throw std::domain_error("pow_ratio_reaches_at: need w >= 1, p >= 1, q >= 1");
  cpp_int wq = ipow(w, q);
  if (ipow(kMaxValue, p) < wq) return kNever;
  // Smallest x with x^p >= w^q, by bisection; ~63 big-int powers.
  u64 lo = 1, hi = kMaxValue;
  while (lo < hi) {
    u64 mid = lo + (hi - lo) / 2;
    if (ipow(mid, p) >= wq)
      hi = mid;
    else
      lo = mid + 1;
  }
  return lo;
}

u64 floor_half_pow_ratio(u64 x, unsigned p, unsigned q) {
  // floor(y/2) = floor(floor(y)/2) for y >= 0.
  return floor_pow_ratio(x, p, q) >> 1;
}

u64 half_pow_ratio_reaches_at(u64 m, unsigned p, unsigned q) {
  if (m == 0) return 1;
  if (m > (kMaxValue >> 1)) return kNever;
  return pow_ratio_reaches_at(2 * m, p, q);
}

bool sqrt_gap_at_least_inv_k(u64 a, u64 b, u64 k) {
  if (a < 1 || b <= a || k < 1)
    throw std::domain_error("sqrt_gap_at_least_inv_k: need 1 <= a < b, k >= 1");
  cpp_int lhs = cpp_int(k) * k * (b - a) - 1;
  if (lhs < 0) return false;
  return lhs * lhs >= cpp_int(4) * k * k * a;
}

bool sqrt_gap_at_least(u64 a, u64 b, double t) {
  if (a < 1 || b <= a || !std::isfinite(t))
    throw std::domain_error("sqrt_gap_at_least: need 1 <= a < b, t finite");
  if (t <= 0) return true;
  // t = mant * 2^e with mant an exact 53-bit integer.
  int bexp;
  double frac = std::frexp(t, &bexp);
  auto mant = static_cast<u64>(std::ldexp(frac, 53));
  int e = bexp - 53;
  cpp_int m = mant;
  cpp_int lhs, rhs_sq;
  if (e >= 0) {
    // sqrt(b) >= sqrt(a) + M with integer M = mant * 2^e:
    //   b - a - M^2 >= 2 M sqrt(a)  <=>  (b - a - M^2)^2 >= 4 M^2 a.
    cpp_int M = m << e;
    lhs = cpp_int(b) - a - M * M;
    rhs_sq = 4 * M * M * a;
  } else {
    // Scale by 2^s, s = -e:  2^{2s}(b - a) - mant^2 >= 2^{s+1} mant sqrt(a).
    int s = -e;
    lhs = (cpp_int(b - a) << (2 * s)) - m * m;
    rhs_sq = (m * m * a) << (2 * s + 2);
  }
  if (lhs < 0) return false;
  return lhs * lhs >= rhs_sq;
}

}  // namespace gaplab::exact
