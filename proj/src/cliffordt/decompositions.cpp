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

#include <array>
#include <sstream>
#include <stdexcept>

#include "cliffordt/cliffordt.hpp"

namespace revfp::ct {

namespace {

// Tokens: H2, T0, t1 (T dagger), P3, N0 (X), X1.2 (CNOT target 1, control 2).
// Wire 0 is the top line of the drawing, which is also operand 0.
std::vector<PGate> parse(const char* src) {
  std::vector<PGate> out;
  std::istringstream in(src);
  std::string tok;
  while (in >> tok) {
    PGate g;
    switch (tok[0]) {
      case 'H': g.kind = PKind::H; break;
      case 'T': g.kind = PKind::T; break;
      case 't': g.kind = PKind::T_DAG; break;
      case 'P': g.kind = PKind::P; break;
      case 'N': g.kind = PKind::NOT; break;
      case 'X': g.kind = PKind::CNOT; break;
      default: throw std::logic_error("bad decomposition token " + tok);
    }
    auto dot = tok.find('.');
    g.target = std::stoi(tok.substr(1, dot == std::string::npos ? std::string::npos : dot - 1));
    if (dot != std::string::npos) g.control = std::stoi(tok.substr(dot + 1));
    out.push_back(g);
  }
  return out;
}

constexpr const char* kToffoli =
    "H2 T0 T1 T2 X0.1 X1.2 X2.0 t1 X1.0 t0 t1 T2 X1.2 X2.0 X0.1 H2";
constexpr const char* kPeresDrawn =
    "H2 T0 T1 T2 X1.0 X0.2 X2.1 t1 X0.1 t0 t1 T2 X0.2 X2.1 H2";
// the eighth gate acts on the top line; on line B the circuit is not a permutation
constexpr const char* kPeres =
    "H2 T0 T1 T2 X1.0 X0.2 X2.1 t0 X0.1 t0 t1 T2 X0.2 X2.1 H2";
constexpr const char* kTR =
    "T1 H2 X1.2 t0 t1 t2 X1.0 X0.2 T0 T1 X1.2 X0.2 t1 H2";
constexpr const char* kFredkin =
    "X1.2 X1.0 H2 T0 t1 T2 X1.2 X2.0 T1 t2 X1.0 t1 X2.0 X1.2 T1 H2 X1.2";
constexpr const char* kRHS1 =
    "T1 H2 X1.2 t0 t1 t2 X1.0 X0.2 T0 T1 X1.2 X0.2 t1 X1.0 H2";
constexpr const char* kRHS2 =
    "T2 H3 X2.3 t1 t2 t3 X2.1 X1.3 T1 T2 X2.3 X1.3 t2 X0.2 H3 X2.1";
constexpr const char* kRFS1 =
    "H3 X2.3 T2 t3 X2.3 t2 X2.1 T1 X1.3 X2.0 T0 t1 T3 X1.3 X0.3 t0 T2 T3 X0.3 "
    "X2.3 t2 T3 X2.3 H3";
constexpr const char* kRFS2 =
    "H3 X2.3 T2 t3 X2.3 t2 X2.1 T1 X1.3 X2.0 T0 t1 T3 X1.3 X0.3 t0 T2 T3 X0.3 X0.1 "
    "X2.3 t2 T3 X2.3 X0.2 H3";
constexpr const char* kRFA =
    "H3 X3.2 T0 T1 T2 t3 X1.0 X3.2 X0.3 X2.1 X1.0 X3.2 t0 t1 t2 T3 X1.0 X3.2 P3 X0.3 H3";
constexpr const char* kCV = "T0 H1 X0.1 t0 T1 X0.1 H1";
constexpr const char* kCVdag = "H1 X0.1 T0 t1 X0.1 t0 H1";

std::vector<PGate> mirror(const std::vector<PGate>& f) {
  std::vector<PGate> out;
  for (auto it = f.rbegin(); it != f.rend(); ++it) {
    PGate g = *it;
    if (g.kind == PKind::T) {
      g.kind = PKind::T_DAG;
    } else if (g.kind == PKind::T_DAG) {
      g.kind = PKind::T;
    } else if (g.kind == PKind::P) {
      // P^-1 = P^3 keeps us inside the fixed gate set
      out.push_back(g);
      out.push_back(g);
    }
    out.push_back(g);
  }
  return out;
}

struct Table {
  std::array<std::vector<PGate>, ir::kNumGateKinds> fwd;
  std::array<std::vector<PGate>, ir::kNumGateKinds> inv;
  std::vector<PGate> peres_drawn;
  std::vector<PGate> cv, cv_dag;
};

const Table& table() {
  static const Table t = [] {
    Table t;
    using K = ir::GateKind;
    auto put = [&](K k, std::vector<PGate> v) {
      t.inv[static_cast<int>(k)] = mirror(v);
      t.fwd[static_cast<int>(k)] = std::move(v);
    };
    put(K::NOT, parse("N0"));
    put(K::CNOT, parse("X1.0"));
    put(K::TOFFOLI, parse(kToffoli));
    put(K::FREDKIN, parse(kFredkin));
    put(K::PERES, parse(kPeres));
    put(K::TR, parse(kTR));
    put(K::RHS1, parse(kRHS1));
    put(K::RHS2, parse(kRHS2));
    put(K::RFS1, parse(kRFS1));
    put(K::RFS2, parse(kRFS2));
    put(K::RFA, parse(kRFA));
    t.peres_drawn = parse(kPeresDrawn);
    t.cv = parse(kCV);
    t.cv_dag = parse(kCVdag);
    return t;
  }();
  return t;
}

}  // namespace

std::string_view pkind_name(PKind k) {
  static constexpr std::string_view names[] = {"H", "T", "T_DAG", "CNOT", "NOT", "P"};
  return names[static_cast<int>(k)];
}

const std::vector<PGate>& decomposition(ir::GateKind k, bool inverse) {
  const Table& t = table();
  return inverse && !ir::self_inverse(k) ? t.inv[static_cast<int>(k)] : t.fwd[static_cast<int>(k)];
}

const std::vector<PGate>& peres_as_drawn() { return table().peres_drawn; }

std::vector<PGate> rfa_with_p_as_t() {
  auto v = table().fwd[static_cast<int>(ir::GateKind::RFA)];
  for (auto& g : v)
    if (g.kind == PKind::P) g.kind = PKind::T;
  return v;
}

PhysicalCircuit controlled_v() { return {2, table().cv}; }
PhysicalCircuit controlled_v_dag() { return {2, table().cv_dag}; }

}  // namespace revfp::ct
