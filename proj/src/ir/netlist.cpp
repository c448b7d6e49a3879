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

#include "ir/netlist.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace revfp::ir {

using ojson = nlohmann::ordered_json;

std::string to_netlist(const Circuit& c) {
  std::string out = "{\n\"wires\": [\n";
  const auto& ws = c.wires();
  for (size_t i = 0; i < ws.size(); ++i) {
    ojson w;
    w["id"] = ws[i].id;
    w["name"] = ws[i].name;
    w["role"] = role_name(ws[i].role);
    out += w.dump();
    out += i + 1 < ws.size() ? ",\n" : "\n";
  }
  out += "],\n\"gates\": [\n";
  const auto& gs = c.gates();
  for (size_t i = 0; i < gs.size(); ++i) {
    const Gate& g = gs[i];
    ojson j;
    j["kind"] = kind_name(g.kind);
    ojson ops = ojson::array();
    for (int k = 0; k < g.arity(); ++k) ops.push_back(g.ops[k]);
    j["operands"] = ops;
    j["inverse_flag"] = g.inverse;
    j["stage"] = stage_name(g.stage);
    out += j.dump();
    out += i + 1 < gs.size() ? ",\n" : "\n";
  }
  out += "]\n}\n";
  return out;
}

Circuit from_netlist(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw CircuitError(std::string("netlist: ") + e.what());
  }
  if (!j.is_object() || !j.contains("wires") || !j.contains("gates"))
    throw CircuitError("netlist: expected wires and gates");
  try {
    Circuit c;
    int expect = 0;
    for (const auto& w : j.at("wires")) {
      if (w.at("id").get<int>() != expect) throw CircuitError("netlist: wire ids must be 0..n-1 in order");
      auto role = role_from_name(w.at("role").get<std::string>());
      if (!role) throw CircuitError("netlist: bad role");
      c.add_wire(w.at("name").get<std::string>(), *role);
      ++expect;
    }
    if (c.width() == 0) throw CircuitError("empty circuit");
    for (const auto& gj : j.at("gates")) {
      Gate g;
      auto k = kind_from_name(gj.at("kind").get<std::string>());
      if (!k) throw CircuitError("netlist: unknown gate kind " + gj.at("kind").get<std::string>());
      g.kind = *k;
      const auto& ops = gj.at("operands");
      if (static_cast<int>(ops.size()) != arity(*k)) throw CircuitError("netlist: wrong operand count");
      for (size_t i = 0; i < ops.size(); ++i) g.ops[i] = ops[i].get<int>();
      g.inverse = gj.at("inverse_flag").get<bool>();
      auto st = stage_from_name(gj.at("stage").get<std::string>());
      if (!st) throw CircuitError("netlist: bad stage");
      g.stage = *st;
      c.append(g);
    }
    return c;
  } catch (const nlohmann::json::exception& e) {
    throw CircuitError(std::string("netlist: ") + e.what());
  }
}

void write_netlist(const Circuit& c, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw CircuitError("cannot write " + path);
  out << to_netlist(c);
  if (!out) throw CircuitError("write failed: " + path);
}

Circuit read_netlist(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CircuitError("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return from_netlist(ss.str());
}

}  // namespace revfp::ir
