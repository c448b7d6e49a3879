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

#include <cstdio>

#include "blocks/blocks.hpp"
#include "cliffordt/cliffordt.hpp"
#include "json.hpp"

namespace revfp::ct {

namespace {

UnitaryMatrix controlled(const cplx v[4]) {
  UnitaryMatrix u(2);
  // wire 0 (bit 0) is the control
  u.at(1, 1) = v[0];
  u.at(1, 3) = v[1];
  u.at(3, 1) = v[2];
  u.at(3, 3) = v[3];
  return u;
}

const cplx kV[4] = {{0.5, 0.5}, {0.5, -0.5}, {0.5, -0.5}, {0.5, 0.5}};
const cplx kVdag[4] = {{0.5, -0.5}, {0.5, 0.5}, {0.5, 0.5}, {0.5, -0.5}};

DecompositionRow row(std::string name, const PhysicalCircuit& pc, const UnitaryMatrix& target,
                     std::optional<int> paper, double tol, int max_qubits = 5) {
  DecompositionRow r;
  r.name = std::move(name);
  r.t_count = t_count(pc);
  r.t_depth = t_depth(pc, DepthMode::Gate);
  r.t_depth_layer = t_depth(pc, DepthMode::Layer);
  r.paper_t_depth = paper;
  UnitaryMatrix u = unitary(pc, max_qubits);
  r.max_deviation = phase_deviation(u, target);
  r.pass = r.max_deviation <= tol && (!paper || *paper == r.t_depth);
  return r;
}

DecompositionRow logical_row(std::string name, ir::GateKind k, std::optional<int> paper, double tol) {
  return row(std::move(name), lower_gate(k), permutation_matrix(k), paper, tol);
}

std::string fmt_dev(double d) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", d);
  return buf;
}

}  // namespace

std::vector<DecompositionRow> check_decompositions(double tol) {
  using K = ir::GateKind;
  std::vector<DecompositionRow> rows;
  rows.push_back(logical_row("Toffoli", K::TOFFOLI, 3, tol));

  rows.push_back(logical_row("Peres", K::PERES, 3, tol));
  {
    PhysicalCircuit drawn{3, peres_as_drawn()};
    double dev = phase_deviation(unitary(drawn), permutation_matrix(K::PERES));
    rows.back().note = "printed circuit deviates by " + fmt_dev(dev) +
                       "; its eighth gate (T-dagger) belongs on line A, not B";
  }

  rows.push_back(logical_row("TR", K::TR, 4, tol));
  rows.push_back(logical_row("Fredkin", K::FREDKIN, 4, tol));
  rows.push_back(row("CV", controlled_v(), controlled(kV), std::nullopt, tol));
  rows.push_back(row("CV_dag", controlled_v_dag(), controlled(kVdag), std::nullopt, tol));

  rows.push_back(logical_row("RFA", K::RFA, 2, tol));
  {
    PhysicalCircuit as_t{4, rfa_with_p_as_t()};
    double dev = phase_deviation(unitary(as_t), permutation_matrix(K::RFA));
    rows.back().note = "P read as S; reading it as T deviates by " + fmt_dev(dev);
  }

  {
    blocks::BlockHandle cell = blocks::build_rlzc();
    PhysicalCircuit pc = lower(cell.circuit);
    auto target = permutation_matrix(circuit_permutation(cell.circuit), cell.circuit.width());
    rows.push_back(row("RLZC", pc, target, 11, tol, cell.circuit.width()));
    rows.back().note = "8 qubits; opaque-gate scheduling";
  }

  rows.push_back(logical_row("RHS1", K::RHS1, 4, tol));
  rows.push_back(logical_row("RHS2", K::RHS2, 4, tol));
  rows.push_back(logical_row("RFS1", K::RFS1, 6, tol));
  rows.push_back(logical_row("RFS2", K::RFS2, 6, tol));
  return rows;
}

std::string format_decomposition_table(const std::vector<DecompositionRow>& rows) {
  std::string out;
  char buf[256];
  std::snprintf(buf, sizeof buf, "%-8s %7s %7s %11s %7s %10s  %s\n", "gate", "T-count", "T-depth",
                "layer-depth", "paper", "max-dev", "status");
  out += buf;
  for (const auto& r : rows) {
    std::string paper = r.paper_t_depth ? std::to_string(*r.paper_t_depth) : "-";
    std::snprintf(buf, sizeof buf, "%-8s %7lld %7lld %11lld %7s %10.2e  %s\n", r.name.c_str(),
                  static_cast<long long>(r.t_count), static_cast<long long>(r.t_depth),
                  static_cast<long long>(r.t_depth_layer), paper.c_str(), r.max_deviation,
                  r.pass ? "PASS" : "FAIL");
    out += buf;
    if (!r.note.empty()) out += "         note: " + r.note + "\n";
  }
  return out;
}

std::string decomposition_json(const std::vector<DecompositionRow>& rows) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& r : rows) {
    nlohmann::ordered_json j;
    j["name"] = r.name;
    j["t_count"] = r.t_count;
    j["t_depth"] = r.t_depth;
    j["t_depth_layer"] = r.t_depth_layer;
    j["paper_t_depth"] = r.paper_t_depth ? nlohmann::ordered_json(*r.paper_t_depth) : nullptr;
    j["max_deviation"] = r.max_deviation;
    j["pass"] = r.pass;
    j["note"] = r.note;
    arr.push_back(j);
  }
  return arr.dump(2) + "\n";
}

}  // namespace revfp::ct
