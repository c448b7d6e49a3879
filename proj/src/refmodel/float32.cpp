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

#include <charconv>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "refmodel/refmodel.hpp"

namespace revfp::ref {

std::string_view class_name(FloatClass c) {
  switch (c) {
    case FloatClass::Normal: return "normal";
    case FloatClass::Zero: return "zero";
    case FloatClass::Subnormal: return "subnormal";
    case FloatClass::Inf: return "inf";
    case FloatClass::NaN: return "nan";
  }
  return "?";
}

Float32Fields decode(uint32_t w) { return {w >> 31, (w >> 23) & 0xFF, w & 0x7FFFFF}; }

uint32_t encode(const Float32Fields& f) {
  return ((f.sign & 1) << 31) | ((f.exponent & 0xFF) << 23) | (f.mantissa & 0x7FFFFF);
}

FloatClass classify(uint32_t w) {
  Float32Fields f = decode(w);
  if (f.exponent == 0) return f.mantissa == 0 ? FloatClass::Zero : FloatClass::Subnormal;
  if (f.exponent == 0xFF) return f.mantissa == 0 ? FloatClass::Inf : FloatClass::NaN;
  return FloatClass::Normal;
}

std::optional<uint32_t> parse_hex(std::string_view s) {
  if (s.size() > 2 && s[0] == '0' && (s[1] == 'x' || s[1] == 'X')) s.remove_prefix(2);
  if (s.empty() || s.size() > 8) return std::nullopt;
  uint32_t v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v, 16);
  if (ec != std::errc() || p != s.data() + s.size()) return std::nullopt;
  return v;
}

std::string to_hex(uint32_t w) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "%08X", w);
  return buf;
}

std::vector<Vector> parse_vectors(const std::string& text) {
  std::vector<Vector> out;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto h = line.find('#'); h != std::string::npos) line.resize(h);
    std::istringstream ls(line);
    std::string t[4];
    int n = 0;
    while (n < 4 && ls >> t[n]) ++n;
    if (n == 0) continue;
    std::optional<uint32_t> v[3];
    if (n == 3)
      for (int i = 0; i < 3; ++i) v[i] = parse_hex(t[i]);
    if (n != 3 || !v[0] || !v[1] || !v[2])
      throw std::runtime_error("vectors line " + std::to_string(lineno) + ": expected 'a b expected' hex words");
    out.push_back({*v[0], *v[1], *v[2]});
  }
  return out;
}

std::string_view status_name(OracleStatus s) {
  switch (s) {
    case OracleStatus::Ok: return "ok";
    case OracleStatus::Unsupported: return "unsupported-operand";
    case OracleStatus::ZeroResult: return "zero-result";
    case OracleStatus::OutOfRange: return "exponent-out-of-range";
  }
  return "?";
}

}  // namespace revfp::ref
