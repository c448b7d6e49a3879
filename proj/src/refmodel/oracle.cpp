// Copyright 2026 The revfp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <algorithm>
#include <bit>
#include <cfenv>
#include <cstring>

#include "refmodel/refmodel.hpp"

namespace revfp::ref {

namespace {
constexpr uint32_t kMaxShift = 26;
constexpr uint32_t kImplicit = 1u << 23;
}  // namespace

int leading_zeros(uint32_t x) { return std::countl_zero(x); }

Aligned align(const Float32Fields& a, const Float32Fields& b) {
  Aligned al;
  al.swapped = a.exponent < b.exponent;
  al.x = al.swapped ? b : a;
  al.y = al.swapped ? a : b;
  al.diff = al.x.exponent - al.y.exponent;
  al.shift = std::min(al.diff, kMaxShift);
  al.x_mag = (kImplicit | al.x.mantissa) << 3;
  uint32_t y = (kImplicit | al.y.mantissa) << 3;
  uint32_t lost = y & ((1u << al.shift) - 1);
  al.sticky = lost != 0;
  al.y_mag = (y >> al.shift) | (al.sticky ? 1u : 0u);
  return al;
}

RawSum add_aligned(const Aligned& al) {
  int64_t x = al.x.sign ? -int64_t{al.x_mag} : int64_t{al.x_mag};
  int64_t y = al.y.sign ? -int64_t{al.y_mag} : int64_t{al.y_mag};
  int64_t s = x + y;
  RawSum r;
  r.sign = s < 0;
  r.magnitude = static_cast<uint32_t>(s < 0 ? -s : s);
  return r;
}

Normalized normalize(uint32_t m) {
  int p = 31 - leading_zeros(m);
  Normalized n;
  n.exp_delta = p - 26;
  uint32_t below = m & ((1u << p) - 1);
  n.mantissa = p >= 23 ? below >> (p - 23) : below << (23 - p);
  return n;
}

OracleResult oracle_add_rtz(uint32_t a, uint32_t b) {
  OracleResult r;
  if (classify(a) != FloatClass::Normal || classify(b) != FloatClass::Normal) {
    r.status = OracleStatus::Unsupported;
    return r;
  }
  Aligned al = align(decode(a), decode(b));
  RawSum s = add_aligned(al);
  if (s.magnitude == 0) {
    r.status = OracleStatus::ZeroResult;
    return r;
  }
  Normalized n = normalize(s.magnitude);
  int e = static_cast<int>(al.x.exponent) + n.exp_delta;
  if (e <= 0 || e >= 255) r.status = OracleStatus::OutOfRange;
  r.word = encode({s.sign, static_cast<uint32_t>(e) & 0xFF, n.mantissa});
  return r;
}

uint32_t native_add_rtz(uint32_t a, uint32_t b) {
  volatile float fa, fb;
  float ta, tb;
  std::memcpy(&ta, &a, 4);
  std::memcpy(&tb, &b, 4);
  fa = ta;
  fb = tb;
  int old = std::fegetround();
  std::fesetround(FE_TOWARDZERO);
  volatile float fs = fa + fb;
  std::fesetround(old);
  float s = fs;
  uint32_t out;
  std::memcpy(&out, &s, 4);
  return out;
}

}  // namespace revfp::ref
