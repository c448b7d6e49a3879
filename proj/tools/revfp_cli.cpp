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

// revfp: build, simulate, verify and report on the reversible binary32 adder.
// Exit codes: 0 pass, 1 mismatch, 2 usage error, 3 other failure.

#include <cinttypes>
#include <cstdio>
#include <fstream>
#include <string>

#include "CLI11.hpp"
#include "revfp/revfp.h"

namespace {

constexpr int kPass = 0;
constexpr int kMismatch = 1;
constexpr int kUsage = 2;
constexpr int kError = 3;

int report_error(revfp_status s) {
  std::fprintf(stderr, "revfp: %s: %s\n", revfp_status_name(s), revfp_last_error());
  switch (s) {
    case REVFP_OK: return kPass;
    case REVFP_E_MISMATCH: return kMismatch;
    case REVFP_E_INVALID_ARG:
    case REVFP_E_PARSE:
    case REVFP_E_UNSUPPORTED: return kUsage;
    default: return kError;
  }
}

bool parse_word(const std::string& s, uint32_t* out) {
  std::string t = s;
  if (t.size() > 2 && t[0] == '0' && (t[1] == 'x' || t[1] == 'X')) t = t.substr(2);
  if (t.empty() || t.size() > 8) return false;
  for (char ch : t)
    if (!std::isxdigit(static_cast<unsigned char>(ch))) return false;
  *out = static_cast<uint32_t>(std::stoul(t, nullptr, 16));
  return true;
}

// Owns a string handed out by the library.
struct Str {
  char* p = nullptr;
  ~Str() { revfp_string_free(p); }
  const char* c_str() const { return p ? p : ""; }
};

struct Adder {
  revfp_adder* p = nullptr;
  ~Adder() { revfp_adder_free(p); }
};

revfp_status build_adder(Adder* a) {
  revfp_cost_table* t = nullptr;
  revfp_status s = revfp_cost_table_from_env(&t);
  if (s != REVFP_OK) return s;
  s = revfp_adder_build(t, &a->p);
  revfp_cost_table_free(t);
  return s;
}

int cmd_build(const std::string& out) {
  Adder a;
  if (auto s = build_adder(&a); s != REVFP_OK) return report_error(s);
  if (auto s = revfp_adder_write_netlist(a.p, out.c_str()); s != REVFP_OK) return report_error(s);
  revfp_stats st{};
  revfp_adder_stats(a.p, &st);
  std::printf("wrote %s: %" PRId64 " wires, %" PRId64 " gates, QC %" PRId64 ", GO %" PRId64
              ", CI %" PRId64 "\n",
              out.c_str(), st.qubits, st.gates, st.quantum_cost, st.garbage_outputs,
              st.constant_inputs);
  return kPass;
}

int cmd_sim(const std::string& as, const std::string& bs, bool trace) {
  uint32_t a = 0, b = 0;
  if (!parse_word(as, &a) || !parse_word(bs, &b)) {
    std::fprintf(stderr, "revfp: operands must be 1-8 hex digits\n");
    return kUsage;
  }
  Adder ad;
  if (auto s = build_adder(&ad); s != REVFP_OK) return report_error(s);
  uint32_t sum = 0;
  int clean = 0;
  Str tr;
  if (auto s = revfp_add(ad.p, a, b, &sum, &clean, trace ? &tr.p : nullptr); s != REVFP_OK)
    return report_error(s);
  uint32_t ref = 0;
  const char* status = "";
  revfp_reference_add(a, b, &ref, &status);
  bool in_model = std::string(status) == "ok";
  if (trace) std::fputs(tr.c_str(), stdout);
  std::printf("%08" PRIX32 " + %08" PRIX32 " = %08" PRIX32 "\n", a, b, sum);
  if (in_model)
    std::printf("reference %08" PRIX32 " (%s)\n", ref, sum == ref ? "match" : "MISMATCH");
  else
    std::printf("reference: %s\n", status);
  std::printf("ancillae %s\n", clean ? "clean" : "DIRTY");
  return (!clean || (in_model && sum != ref)) ? kMismatch : kPass;
}

int cmd_verify(uint64_t n, uint64_t seed, const std::string& vectors) {
  Adder ad;
  if (auto s = build_adder(&ad); s != REVFP_OK) return report_error(s);
  Str text;
  revfp_status s = vectors.empty()
                       ? revfp_verify_random(ad.p, n, seed, &text.p, nullptr)
                       : revfp_verify_vectors(ad.p, vectors.c_str(), &text.p, nullptr);
  std::fputs(text.c_str(), stdout);
  if (s == REVFP_E_MISMATCH) return kMismatch;
  return s == REVFP_OK ? kPass : report_error(s);
}

int cmd_report(const std::string& ledger) {
  Adder ad;
  if (auto s = build_adder(&ad); s != REVFP_OK) return report_error(s);
  Str text, json;
  if (auto s = revfp_report_tables(ad.p, &text.p, ledger.empty() ? nullptr : &json.p); s != REVFP_OK)
    return report_error(s);
  std::fputs(text.c_str(), stdout);
  if (!ledger.empty()) {
    std::ofstream out(ledger);
    out << json.c_str();
    if (!out) {
      std::fprintf(stderr, "revfp: cannot write %s\n", ledger.c_str());
      return kError;
    }
    std::printf("ledger written to %s\n", ledger.c_str());
  }
  return kPass;
}

int cmd_check() {
  Str text;
  revfp_status s = revfp_check_decompositions(1e-10, &text.p, nullptr);
  std::fputs(text.c_str(), stdout);
  if (s == REVFP_E_MISMATCH) return kMismatch;
  return s == REVFP_OK ? kPass : report_error(s);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Reversible IEEE-754 binary32 adder toolkit"};
  app.require_subcommand(1);

  std::string out;
  auto* build = app.add_subcommand("build", "assemble the adder and write its netlist");
  build->add_option("--out", out, "netlist path")->required();

  std::string a, b;
  bool trace = false;
  auto* sim = app.add_subcommand("sim", "simulate one addition");
  sim->add_option("--a", a, "first operand, hex word")->required();
  sim->add_option("--b", b, "second operand, hex word")->required();
  sim->add_flag("--trace", trace, "print per-stage register values as JSON");

  uint64_t n = 0, seed = 0;
  std::string vectors;
  auto* verify = app.add_subcommand("verify", "compare the circuit with the reference model");
  auto* o_n = verify->add_option("--random", n, "number of random pairs");
  auto* o_seed = verify->add_option("--seed", seed, "random seed");
  auto* o_vec = verify->add_option("--vectors", vectors, "file of 'a b expected' hex triples");
  o_n->needs(o_seed);
  o_seed->needs(o_n);
  o_vec->excludes(o_n)->excludes(o_seed);

  bool tables = false;
  std::string ledger;
  auto* report = app.add_subcommand("report", "print cost and depth tables");
  report->add_flag("--tables", tables, "print Tables I-IV and the discrepancy ledger")->required();
  report->add_option("--ledger", ledger, "also write metrics and ledger JSON here");

  auto* check = app.add_subcommand("check-decompositions", "verify the Clifford+T decompositions");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  if (*build) return cmd_build(out);
  if (*sim) return cmd_sim(a, b, trace);
  if (*verify) {
    if (vectors.empty() && n == 0) {
      std::fprintf(stderr, "revfp: verify needs --random N --seed S or --vectors FILE\n");
      return kUsage;
    }
    return cmd_verify(n, seed, vectors);
  }
  if (*report) return cmd_report(ledger);
  if (*check) return cmd_check();
  return kUsage;
}
