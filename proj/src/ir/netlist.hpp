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

#include <string>

#include "ir/circuit.hpp"

namespace revfp::ir {

// JSON netlist, one wire or gate record per line:
//   {"wires":[{"id","name","role"}...], "gates":[{"kind","operands","inverse_flag","stage"}...]}
std::string to_netlist(const Circuit& c);
Circuit from_netlist(const std::string& text);

void write_netlist(const Circuit& c, const std::string& path);
Circuit read_netlist(const std::string& path);

}  // namespace revfp::ir
