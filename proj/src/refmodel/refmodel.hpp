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

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace revfp::ref {

enum class FloatClass { Normal, Zero, Subnormal, Inf, NaN };

std::string_view class_name(FloatClass c);

struct Float32Fields {
  uint32_t sign = 0;      // 1 bit
  uint32_t exponent = 0;  // 8 bits
  uint32_t mantissa = 0;  // 23 bits
  bool operator==(const Float32Fields&) const = default;
};

Float32Fields decode(uint32_t word);
uint32_t encode(const Float32Fields& f);
FloatClass classify(uint32_t word);

std::optional<uint32_t> parse_hex(std::string_view s);
std::string to_hex(uint32_t w);

struct Vector {
  uint32_t a, b, expected;
};
// One "a b expected" triple of hex words per line; blank lines and '#' comments skipped.
// Throws std::runtime_error naming the line on malformed input.
std::vector<Vector> parse_vectors(const std::string& text);

// --- oracle -----------------------------------------------------------------

enum class OracleStatus {
  Ok,
  Unsupported,  // an operand is zero, subnormal, inf or nan
  ZeroResult,   // exact cancellation
  OutOfRange,   // result exponent outside 1..254
};

std::string_view status_name(OracleStatus s);

struct OracleResult {
  uint32_t word = 0;
  OracleStatus status = OracleStatus::Ok;
};

// Swap by exponent, align with a 26-place cap and sticky, add in two's
// complement, normalize, truncate.
OracleResult oracle_add_rtz(uint32_t a, uint32_t b);

// Native single-precision addition in round-toward-zero mode.
uint32_t native_add_rtz(uint32_t a, uint32_t b);

// --- per-stage mirrors --------------------------------------------------------

struct Aligned {
  Float32Fields x, y;  // x has the larger (or equal) exponent
  bool swapped = false;
  uint32_t diff = 0;   // ex - ey
  uint32_t shift = 0;  // min(diff, 26)
  uint32_t x_mag = 0;  // 27 bits: 1.m followed by three zero bits
  uint32_t y_mag = 0;  // 27 bits: shifted 1.m, guard, round, sticky
  bool sticky = false;
};

Aligned align(const Float32Fields& a, const Float32Fields& b);

struct RawSum {
  uint32_t sign = 0;
  uint32_t magnitude = 0;  // 28 bits
};

RawSum add_aligned(const Aligned& al);

struct Normalized {
  uint32_t mantissa = 0;  // 23 bits
  int exp_delta = 0;      // added to the larger exponent
};

// magnitude must be nonzero; its binary point sits after bit 26.
Normalized normalize(uint32_t magnitude);

// Leading zeros of a 32-bit word; 32 for zero.
int leading_zeros(uint32_t x);

}  // namespace revfp::ref
