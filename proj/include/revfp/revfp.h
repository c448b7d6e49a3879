/* Copyright 2026 The revfp Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* C interface to the reversible binary32 adder. Every function returns a
 * revfp_status; on failure revfp_last_error() describes the problem. Strings
 * handed out through char** parameters are released with revfp_string_free. */

#ifndef REVFP_REVFP_H_
#define REVFP_REVFP_H_

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(REVFP_BUILDING)
#define REVFP_API __attribute__((visibility("default")))
#else
#define REVFP_API
#endif

typedef enum revfp_status {
  REVFP_OK = 0,
  REVFP_E_INVALID_ARG = 1,
  REVFP_E_IO = 2,
  REVFP_E_PARSE = 3,
  REVFP_E_UNSUPPORTED = 4, /* operand is zero, subnormal, Inf or NaN */
  REVFP_E_MISMATCH = 5,    /* a verification ran and failed */
  REVFP_E_INTERNAL = 6
} revfp_status;

typedef struct revfp_adder revfp_adder;
typedef struct revfp_cost_table revfp_cost_table;

typedef struct revfp_stats {
  int64_t qubits;
  int64_t gates;
  int64_t quantum_cost;
  int64_t garbage_outputs;
  int64_t constant_inputs;
  int64_t wrapped_qubits; /* after the compute-copy-uncompute wrap */
  int64_t wrapped_gates;
} revfp_stats;

/* Message for the last failed call on this thread; "" if none. */
REVFP_API const char* revfp_last_error(void);
REVFP_API const char* revfp_status_name(revfp_status s);
REVFP_API void revfp_string_free(char* s);

REVFP_API revfp_status revfp_cost_table_default(revfp_cost_table** out);
/* JSON object mapping gate kind names to positive integer costs. */
REVFP_API revfp_status revfp_cost_table_load(const char* path, revfp_cost_table** out);
/* Loads the file named by REVFP_COST_TABLE, or the defaults when unset. */
REVFP_API revfp_status revfp_cost_table_from_env(revfp_cost_table** out);
REVFP_API revfp_status revfp_cost_table_get(const revfp_cost_table* t, const char* kind,
                                            int64_t* cost);
REVFP_API void revfp_cost_table_free(revfp_cost_table* t);

/* table may be NULL for the default costs. */
REVFP_API revfp_status revfp_adder_build(const revfp_cost_table* table, revfp_adder** out);
REVFP_API void revfp_adder_free(revfp_adder* adder);
REVFP_API revfp_status revfp_adder_stats(const revfp_adder* adder, revfp_stats* out);
/* Writes the forward netlist as JSON. */
REVFP_API revfp_status revfp_adder_write_netlist(const revfp_adder* adder, const char* path);

/* Simulates a + b on the wrapped circuit. clean (optional) receives 1 when
 * every ancilla returned to its constant and both inputs were restored.
 * trace_json (optional) receives per-stage register snapshots. */
REVFP_API revfp_status revfp_add(const revfp_adder* adder, uint32_t a, uint32_t b, uint32_t* sum,
                                 int* clean, char** trace_json);

/* Reference-model sum. status receives "ok", "zero-result",
 * "exponent-out-of-range" or "unsupported-operand" (static storage). */
REVFP_API revfp_status revfp_reference_add(uint32_t a, uint32_t b, uint32_t* sum,
                                           const char** status);

/* Sweeps against the reference model. Both report pointers are optional.
 * Returns REVFP_E_MISMATCH when any result or ancilla is wrong. */
REVFP_API revfp_status revfp_verify_random(const revfp_adder* adder, uint64_t count,
                                           uint64_t seed, char** report_text,
                                           char** report_json);
REVFP_API revfp_status revfp_verify_vectors(const revfp_adder* adder, const char* path,
                                            char** report_text, char** report_json);

/* Cost and depth tables with the paper comparison; ledger_json holds the
 * metrics and one record per compared cell. */
REVFP_API revfp_status revfp_report_tables(const revfp_adder* adder, char** tables_text,
                                           char** ledger_json);

/* Checks every Clifford+T decomposition against its target up to global
 * phase. Returns REVFP_E_MISMATCH if one deviates by more than tolerance. */
REVFP_API revfp_status revfp_check_decompositions(double tolerance, char** table_text,
                                                  char** record_json);

#ifdef __cplusplus
}
#endif

#endif /* REVFP_REVFP_H_ */
