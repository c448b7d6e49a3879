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

#include "revfp/revfp.h"

#include <cstdlib>
#include <cstring>
#include <fstream>
#include <new>
#include <sstream>
#include <string>

#include "cliffordt/cliffordt.hpp"
#include "ir/netlist.hpp"
#include "json.hpp"
#include "pipeline/pipeline.hpp"

using namespace revfp;

struct revfp_adder {
  pipeline::AdderArtifact art;
};

struct revfp_cost_table {
  ir::CostTable table;
};

namespace {

thread_local std::string g_error;

revfp_status fail(revfp_status s, std::string msg) {
  g_error = std::move(msg);
  return s;
}

char* dup(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (!p) throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

void put(char** dst, const std::string& s) {
  if (dst) *dst = dup(s);
}

bool readable(const char* path) {
  std::ifstream in(path);
  return static_cast<bool>(in);
}

// Runs f, mapping exceptions to status codes. f returns a status itself.
template <class F>
revfp_status guard(F&& f) {
  g_error.clear();
  try {
    return f();
  } catch (const pipeline::UnsupportedOperand& e) {
    return fail(REVFP_E_UNSUPPORTED, e.what());
  } catch (const std::bad_alloc&) {
    return fail(REVFP_E_INTERNAL, "out of memory");
  } catch (const std::invalid_argument& e) {
    return fail(REVFP_E_INVALID_ARG, e.what());
  } catch (const std::exception& e) {
    return fail(REVFP_E_INTERNAL, e.what());
  }
}

revfp_status parse_error(const std::exception& e) { return fail(REVFP_E_PARSE, e.what()); }

}  // namespace

extern "C" {

const char* revfp_last_error(void) { return g_error.c_str(); }

const char* revfp_status_name(revfp_status s) {
  switch (s) {
    case REVFP_OK: return "ok";
    case REVFP_E_INVALID_ARG: return "invalid argument";
    case REVFP_E_IO: return "i/o error";
    case REVFP_E_PARSE: return "parse error";
    case REVFP_E_UNSUPPORTED: return "unsupported operand";
    case REVFP_E_MISMATCH: return "mismatch";
    case REVFP_E_INTERNAL: return "internal error";
  }
  return "unknown status";
}

void revfp_string_free(char* s) { std::free(s); }

revfp_status revfp_cost_table_default(revfp_cost_table** out) {
  if (!out) return fail(REVFP_E_INVALID_ARG, "out is null");
  return guard([&] {
    *out = new revfp_cost_table{ir::CostTable::defaults()};
    return REVFP_OK;
  });
}

revfp_status revfp_cost_table_load(const char* path, revfp_cost_table** out) {
  if (!path || !out) return fail(REVFP_E_INVALID_ARG, "path or out is null");
  return guard([&] {
    if (!readable(path)) return fail(REVFP_E_IO, std::string("cannot read cost table ") + path);
    try {
      *out = new revfp_cost_table{ir::CostTable::from_file(path)};
    } catch (const ir::CircuitError& e) {
      return parse_error(e);
    }
    return REVFP_OK;
  });
}

revfp_status revfp_cost_table_from_env(revfp_cost_table** out) {
  if (!out) return fail(REVFP_E_INVALID_ARG, "out is null");
  const char* path = std::getenv("REVFP_COST_TABLE");
  if (!path || !*path) return revfp_cost_table_default(out);
  return revfp_cost_table_load(path, out);
}

revfp_status revfp_cost_table_get(const revfp_cost_table* t, const char* kind, int64_t* cost) {
  if (!t || !kind || !cost) return fail(REVFP_E_INVALID_ARG, "null argument");
  auto k = ir::kind_from_name(kind);
  if (!k) return fail(REVFP_E_INVALID_ARG, std::string("unknown gate kind ") + kind);
  if (!t->table.has(*k)) return fail(REVFP_E_INVALID_ARG, std::string("no cost for ") + kind);
  *cost = t->table.cost(*k);
  return REVFP_OK;
}

void revfp_cost_table_free(revfp_cost_table* t) { delete t; }

revfp_status revfp_adder_build(const revfp_cost_table* table, revfp_adder** out) {
  if (!out) return fail(REVFP_E_INVALID_ARG, "out is null");
  return guard([&] {
    ir::CostTable t = table ? table->table : ir::CostTable::defaults();
    try {
      *out = new revfp_adder{pipeline::assemble_fp_adder(t)};
    } catch (const ir::CircuitError& e) {
      // a cost table missing a kind the adder uses
      return fail(REVFP_E_INVALID_ARG, e.what());
    }
    return REVFP_OK;
  });
}

void revfp_adder_free(revfp_adder* adder) { delete adder; }

revfp_status revfp_adder_stats(const revfp_adder* adder, revfp_stats* out) {
  if (!adder || !out) return fail(REVFP_E_INVALID_ARG, "null argument");
  const auto& a = adder->art;
  out->qubits = a.forward.width();
  out->gates = static_cast<int64_t>(a.forward.gates().size());
  out->quantum_cost = a.cost.quantum_cost;
  out->garbage_outputs = a.cost.garbage_outputs;
  out->constant_inputs = a.cost.constant_inputs;
  out->wrapped_qubits = a.wrapped.width();
  out->wrapped_gates = static_cast<int64_t>(a.wrapped.gates().size());
  return REVFP_OK;
}

revfp_status revfp_adder_write_netlist(const revfp_adder* adder, const char* path) {
  if (!adder || !path) return fail(REVFP_E_INVALID_ARG, "null argument");
  return guard([&] {
    try {
      ir::write_netlist(adder->art.forward, path);
    } catch (const ir::CircuitError& e) {
      return fail(REVFP_E_IO, e.what());
    }
    return REVFP_OK;
  });
}

revfp_status revfp_add(const revfp_adder* adder, uint32_t a, uint32_t b, uint32_t* sum, int* clean,
                       char** trace_json) {
  if (!adder || !sum) return fail(REVFP_E_INVALID_ARG, "null argument");
  return guard([&] {
    auto r = pipeline::run_fp_add(adder->art, a, b, trace_json != nullptr);
    *sum = r.sum;
    if (clean) *clean = r.clean ? 1 : 0;
    if (trace_json) *trace_json = dup(pipeline::trace_json(r, a, b));
    return REVFP_OK;
  });
}

revfp_status revfp_reference_add(uint32_t a, uint32_t b, uint32_t* sum, const char** status) {
  if (!sum) return fail(REVFP_E_INVALID_ARG, "sum is null");
  g_error.clear();
  auto r = ref::oracle_add_rtz(a, b);
  *sum = r.word;
  if (status) *status = ref::status_name(r.status).data();
  return REVFP_OK;
}

revfp_status revfp_verify_random(const revfp_adder* adder, uint64_t count, uint64_t seed,
                                 char** report_text, char** report_json) {
  if (!adder) return fail(REVFP_E_INVALID_ARG, "adder is null");
  if (count == 0) return fail(REVFP_E_INVALID_ARG, "count must be positive");
  return guard([&] {
    auto rep = pipeline::verify_pairs(adder->art, pipeline::random_pairs(seed, count));
    put(report_text, pipeline::format_verify(rep));
    put(report_json, pipeline::verify_json(rep));
    return rep.pass() ? REVFP_OK : fail(REVFP_E_MISMATCH, "verification failed");
  });
}

revfp_status revfp_verify_vectors(const revfp_adder* adder, const char* path, char** report_text,
                                  char** report_json) {
  if (!adder || !path) return fail(REVFP_E_INVALID_ARG, "null argument");
  return guard([&] {
    std::ifstream in(path);
    if (!in) return fail(REVFP_E_IO, std::string("cannot read ") + path);
    std::stringstream ss;
    ss << in.rdbuf();
    std::vector<ref::Vector> v;
    try {
      v = ref::parse_vectors(ss.str());
    } catch (const std::exception& e) {
      return parse_error(e);
    }
    if (v.empty()) return fail(REVFP_E_PARSE, std::string("no vectors in ") + path);
    auto rep = pipeline::verify_vectors(adder->art, v);
    put(report_text, pipeline::format_verify(rep));
    put(report_json, pipeline::verify_json(rep));
    return rep.pass() ? REVFP_OK : fail(REVFP_E_MISMATCH, "verification failed");
  });
}

revfp_status revfp_report_tables(const revfp_adder* adder, char** tables_text, char** ledger_json) {
  if (!adder) return fail(REVFP_E_INVALID_ARG, "adder is null");
  return guard([&] {
    auto kq = pipeline::kq_report(adder->art);
    auto rows = pipeline::build_ledger(adder->art, kq);
    put(tables_text, pipeline::format_tables(adder->art, kq, rows));
    if (ledger_json) {
      nlohmann::ordered_json j;
      j["metrics"] = nlohmann::ordered_json::parse(pipeline::metrics_json(adder->art, kq));
      j["ledger"] = nlohmann::ordered_json::parse(pipeline::ledger_json(rows));
      *ledger_json = dup(j.dump(2) + "\n");
    }
    return REVFP_OK;
  });
}

revfp_status revfp_check_decompositions(double tolerance, char** table_text, char** record_json) {
  if (!(tolerance > 0)) return fail(REVFP_E_INVALID_ARG, "tolerance must be positive");
  return guard([&] {
    auto rows = ct::check_decompositions(tolerance);
    put(table_text, ct::format_decomposition_table(rows));
    put(record_json, ct::decomposition_json(rows));
    for (const auto& r : rows)
      if (!r.pass) return fail(REVFP_E_MISMATCH, "decomposition " + r.name + " deviates");
    return REVFP_OK;
  });
}

}  // extern "C"
