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

#include <gtest/gtest.h>

#include <bit>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include "json.hpp"
#include "revfp/revfp.h"

namespace {

uint32_t bits(float f) { return std::bit_cast<uint32_t>(f); }

class CApi : public ::testing::Test {
 protected:
  static void SetUpTestSuite() { ASSERT_EQ(revfp_adder_build(nullptr, &adder_), REVFP_OK); }
  static void TearDownTestSuite() {
    revfp_adder_free(adder_);
    adder_ = nullptr;
  }
  static revfp_adder* adder_;
};

revfp_adder* CApi::adder_ = nullptr;

std::filesystem::path temp(const char* name) { return std::filesystem::temp_directory_path() / name; }

TEST_F(CApi, Add) {
  uint32_t sum = 0;
  int clean = 0;
  char* trace = nullptr;
  ASSERT_EQ(revfp_add(adder_, bits(1.5f), bits(-0.75f), &sum, &clean, &trace), REVFP_OK);
  EXPECT_EQ(sum, bits(0.75f));
  EXPECT_EQ(clean, 1);
  auto j = nlohmann::json::parse(trace);
  EXPECT_EQ(j["sum"], "3F400000");
  EXPECT_EQ(j["stages"].size(), 7u);
  revfp_string_free(trace);

  ASSERT_EQ(revfp_add(adder_, bits(1.0f), bits(2.0f), &sum, nullptr, nullptr), REVFP_OK);
  EXPECT_EQ(sum, bits(3.0f));
}

TEST_F(CApi, Errors) {
  uint32_t sum = 0;
  EXPECT_EQ(revfp_add(adder_, 0, bits(1.0f), &sum, nullptr, nullptr), REVFP_E_UNSUPPORTED);
  EXPECT_NE(std::string(revfp_last_error()).find("unsupported operand"), std::string::npos);
  EXPECT_EQ(revfp_add(nullptr, 1, 2, &sum, nullptr, nullptr), REVFP_E_INVALID_ARG);
  EXPECT_EQ(revfp_add(adder_, bits(1.0f), bits(1.0f), nullptr, nullptr, nullptr), REVFP_E_INVALID_ARG);
  EXPECT_EQ(revfp_adder_write_netlist(adder_, "/nonexistent/dir/x.json"), REVFP_E_IO);
  EXPECT_EQ(revfp_verify_vectors(adder_, "/nonexistent/v.txt", nullptr, nullptr), REVFP_E_IO);
  EXPECT_EQ(revfp_verify_random(adder_, 0, 1, nullptr, nullptr), REVFP_E_INVALID_ARG);
  EXPECT_EQ(revfp_check_decompositions(-1.0, nullptr, nullptr), REVFP_E_INVALID_ARG);
  EXPECT_STREQ(revfp_status_name(REVFP_E_MISMATCH), "mismatch");
}

TEST_F(CApi, StatsAndNetlist) {
  revfp_stats st{};
  ASSERT_EQ(revfp_adder_stats(adder_, &st), REVFP_OK);
  EXPECT_EQ(st.qubits, 64 + st.constant_inputs);
  EXPECT_EQ(st.wrapped_qubits, st.qubits + 32);
  EXPECT_EQ(st.wrapped_gates, 2 * st.gates + 32);
  auto path = temp("revfp_capi_netlist.json");
  ASSERT_EQ(revfp_adder_write_netlist(adder_, path.c_str()), REVFP_OK);
  std::ifstream in(path);
  auto j = nlohmann::json::parse(in);
  EXPECT_EQ(static_cast<int64_t>(j["gates"].size()), st.gates);
  EXPECT_EQ(static_cast<int64_t>(j["wires"].size()), st.qubits);
  std::filesystem::remove(path);
}

TEST_F(CApi, VerifyRandomAndVectors) {
  char* text = nullptr;
  char* json = nullptr;
  ASSERT_EQ(revfp_verify_random(adder_, 3000, 5, &text, &json), REVFP_OK);
  EXPECT_NE(std::string(text).find("PASS"), std::string::npos);
  auto j = nlohmann::json::parse(json);
  EXPECT_EQ(j["mismatches"], 0);
  revfp_string_free(text);
  revfp_string_free(json);

  auto path = temp("revfp_capi_vectors.txt");
  std::ofstream(path) << "# 1 + 2 = 3\n3F800000 40000000 40400000\n";
  EXPECT_EQ(revfp_verify_vectors(adder_, path.c_str(), nullptr, nullptr), REVFP_OK);
  std::ofstream(path) << "3F800000 40000000 40400001\n";
  EXPECT_EQ(revfp_verify_vectors(adder_, path.c_str(), nullptr, nullptr), REVFP_E_MISMATCH);
  std::ofstream(path) << "3F800000 zz\n";
  EXPECT_EQ(revfp_verify_vectors(adder_, path.c_str(), nullptr, nullptr), REVFP_E_PARSE);
  std::filesystem::remove(path);
}

TEST_F(CApi, ReportAndDecompositions) {
  char* text = nullptr;
  char* ledger = nullptr;
  ASSERT_EQ(revfp_report_tables(adder_, &text, &ledger), REVFP_OK);
  EXPECT_NE(std::string(text).find("Table IV"), std::string::npos);
  auto j = nlohmann::json::parse(ledger);
  EXPECT_TRUE(j["metrics"].contains("kq"));
  EXPECT_FALSE(j["ledger"].empty());
  revfp_string_free(text);
  revfp_string_free(ledger);

  char* table = nullptr;
  EXPECT_EQ(revfp_check_decompositions(1e-10, &table, nullptr), REVFP_OK);
  EXPECT_NE(std::string(table).find("RLZC"), std::string::npos);
  revfp_string_free(table);
}

TEST(CApiCostTable, LoadAndEnv) {
  revfp_cost_table* t = nullptr;
  ASSERT_EQ(revfp_cost_table_default(&t), REVFP_OK);
  int64_t c = 0;
  ASSERT_EQ(revfp_cost_table_get(t, "TOFFOLI", &c), REVFP_OK);
  EXPECT_EQ(c, 5);
  EXPECT_EQ(revfp_cost_table_get(t, "SWAP", &c), REVFP_E_INVALID_ARG);
  revfp_cost_table_free(t);

  auto path = temp("revfp_capi_cost.json");
  std::ofstream(path) << R"({"FREDKIN": 6})";
  ASSERT_EQ(revfp_cost_table_load(path.c_str(), &t), REVFP_OK);
  ASSERT_EQ(revfp_cost_table_get(t, "FREDKIN", &c), REVFP_OK);
  EXPECT_EQ(c, 6);
  revfp_adder* a = nullptr;
  ASSERT_EQ(revfp_adder_build(t, &a), REVFP_OK);
  revfp_stats st{};
  revfp_adder_stats(a, &st);
  revfp_adder* d = nullptr;
  ASSERT_EQ(revfp_adder_build(nullptr, &d), REVFP_OK);
  revfp_stats sd{};
  revfp_adder_stats(d, &sd);
  EXPECT_GT(st.quantum_cost, sd.quantum_cost);
  revfp_adder_free(a);
  revfp_adder_free(d);
  revfp_cost_table_free(t);

  setenv("REVFP_COST_TABLE", path.c_str(), 1);
  ASSERT_EQ(revfp_cost_table_from_env(&t), REVFP_OK);
  revfp_cost_table_get(t, "FREDKIN", &c);
  EXPECT_EQ(c, 6);
  revfp_cost_table_free(t);
  unsetenv("REVFP_COST_TABLE");

  std::ofstream(path) << R"({"FREDKIN": "x"})";
  EXPECT_EQ(revfp_cost_table_load(path.c_str(), &t), REVFP_E_PARSE);
  EXPECT_EQ(revfp_cost_table_load("/nonexistent.json", &t), REVFP_E_IO);
  std::filesystem::remove(path);
}

TEST(CApiReference, Add) {
  uint32_t s = 0;
  const char* status = nullptr;
  ASSERT_EQ(revfp_reference_add(bits(1.0f), bits(-1.0f), &s, &status), REVFP_OK);
  EXPECT_STREQ(status, "zero-result");
  ASSERT_EQ(revfp_reference_add(bits(0x1p30f), bits(1.0f), &s, &status), REVFP_OK);
  EXPECT_EQ(s, bits(0x1p30f));
  EXPECT_STREQ(status, "ok");
}

}  // namespace
