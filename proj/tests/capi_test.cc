// Copyright 2026 The Qubofolio Authors
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

#include "qubofolio/qubofolio.h"

#include <gtest/gtest.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <string>

namespace {

std::string take(char* s) {
  std::string out = s ? s : "";
  qf_string_free(s);
  return out;
}

TEST(CApiTest, VersionAndDefaults) {
  EXPECT_STRNE(qf_version(), "");
  qf_budget b;
  qf_budget_init(&b);
  EXPECT_EQ(b.workers, 1);
  EXPECT_EQ(b.has_target, 0);
  EXPECT_GT(b.time_limit, 0.0);
  qf_quantum_options o;
  qf_quantum_options_init(&o);
  EXPECT_STREQ(o.algo, "anneal");
  EXPECT_EQ(o.shots, 1024);
}

TEST(CApiTest, ErrorsSetLastError) {
  qf_problem* p = nullptr;
  EXPECT_EQ(qf_problem_toy(9, 1, 0, 0.0, &p), QF_ERR_SPEC);
  EXPECT_EQ(p, nullptr);
  EXPECT_NE(std::string(qf_last_error()).find("toy"), std::string::npos);
  EXPECT_EQ(qf_problem_from_json("{oops", ".", &p), QF_ERR_PARSE);
  EXPECT_EQ(qf_problem_load("/nonexistent/config.json", &p), QF_ERR_IO);
  qf_qubo* q = nullptr;
  EXPECT_EQ(qf_qubo_read("/nonexistent/x.qubo", &q), QF_ERR_IO);
}

TEST(CApiTest, ToyBuildSolveEvaluate) {
  qf_problem* p = nullptr;
  ASSERT_EQ(qf_problem_toy(2, 2, 0, 0.0, &p), QF_OK);
  qf_qubo* q = nullptr;
  ASSERT_EQ(qf_qubo_build(p, &q), QF_OK);
  EXPECT_EQ(qf_qubo_num_vars(q), 14);

  qf_budget b;
  qf_budget_init(&b);
  qf_report* exact = nullptr;
  ASSERT_EQ(qf_solve(q, "exact", &b, &exact), QF_OK);
  b.time_limit = 2;
  b.max_iterations = 200;
  qf_report* abs = nullptr;
  ASSERT_EQ(qf_solve(q, "abs", &b, &abs), QF_OK);
  EXPECT_NEAR(qf_report_best_energy(abs), qf_report_best_energy(exact),
              1e-9 * std::abs(qf_report_best_energy(exact)));
  qf_report* none = nullptr;
  EXPECT_EQ(qf_solve(q, "magic", &b, &none), QF_ERR_SPEC);

  char* metrics = nullptr;
  char* summary = nullptr;
  ASSERT_EQ(qf_report_evaluate(p, exact, &metrics, &summary), QF_OK);
  EXPECT_NE(take(metrics).find("\"feasible\": true"), std::string::npos);
  EXPECT_FALSE(take(summary).empty());

  char* json = nullptr;
  ASSERT_EQ(qf_report_to_json(exact, &json), QF_OK);
  EXPECT_NE(take(json).find("\"solver\":\"exact\""), std::string::npos);

  qf_problem* other = nullptr;
  ASSERT_EQ(qf_problem_toy(1, 1, 0, 0.0, &other), QF_OK);
  EXPECT_EQ(qf_report_evaluate(other, exact, &metrics, &summary), QF_ERR_MISMATCH);

  qf_problem_free(other);
  qf_report_free(exact);
  qf_report_free(abs);
  qf_qubo_free(q);
  qf_problem_free(p);
}

TEST(CApiTest, FileRoundTrip) {
  const auto dir = std::filesystem::temp_directory_path() / "qubofolio_capi";
  std::filesystem::create_directories(dir);
  const std::string path = (dir / "toy.qubo").string();
  qf_problem* p = nullptr;
  ASSERT_EQ(qf_problem_toy(1, 2, 4, 0.0, &p), QF_OK);
  qf_qubo* q = nullptr;
  ASSERT_EQ(qf_qubo_build(p, &q), QF_OK);
  ASSERT_EQ(qf_qubo_write(q, path.c_str()), QF_OK);
  ASSERT_EQ(qf_qubo_write_ising(q, (dir / "toy.ising").string().c_str()), QF_OK);
  ASSERT_EQ(qf_bqp_write(p, (dir / "toy.bqp.json").string().c_str()), QF_OK);
  qf_qubo* back = nullptr;
  ASSERT_EQ(qf_qubo_read(path.c_str(), &back), QF_OK);
  EXPECT_EQ(qf_qubo_num_vars(back), qf_qubo_num_vars(q));

  char* text = nullptr;
  ASSERT_EQ(qf_problem_to_json(p, &text), QF_OK);
  qf_problem* reparsed = nullptr;
  EXPECT_EQ(qf_problem_from_json(text, ".", &reparsed), QF_OK);
  qf_string_free(text);
  qf_problem_free(reparsed);
  qf_qubo_free(back);
  qf_qubo_free(q);
  qf_problem_free(p);
}

TEST(CApiTest, SweepAndQuantum) {
  qf_problem* p = nullptr;
  ASSERT_EQ(qf_problem_toy(2, 2, 1, 0.0, &p), QF_OK);
  qf_budget b;
  qf_budget_init(&b);
  const double qs[] = {0.0, 1e-2};
  char* csv = nullptr;
  size_t failed = 99;
  ASSERT_EQ(qf_sweep(p, qs, 2, "exact", &b, &csv, &failed), QF_OK);
  EXPECT_EQ(failed, 0u);
  const std::string text = take(csv);
  EXPECT_EQ(text.rfind("q,solver,objective", 0), 0u);
  EXPECT_NE(text.find("0.01,exact,"), std::string::npos);
  ASSERT_EQ(qf_sweep(p, qs, 2, "magic", &b, &csv, &failed), QF_ERR_SWEEP_FAILED);
  EXPECT_EQ(failed, 2u);
  EXPECT_NE(take(csv).find("failed"), std::string::npos);

  qf_qubo* q = nullptr;
  ASSERT_EQ(qf_qubo_build(p, &q), QF_OK);
  qf_quantum_options o;
  qf_quantum_options_init(&o);
  o.algo = "qaoa";
  o.layers = 0;
  o.shots = 16;
  char* run = nullptr;
  ASSERT_EQ(qf_quantum_run(q, &o, &run), QF_OK);
  EXPECT_NE(take(run).find("\"algo\""), std::string::npos);
  o.algo = "bogus";
  EXPECT_EQ(qf_quantum_run(q, &o, &run), QF_ERR_SPEC);
  qf_qubo_free(q);
  qf_problem_free(p);

  ASSERT_EQ(qf_problem_toy(2, 2, 0, 0.0, &p), QF_OK);
  ASSERT_EQ(qf_qubo_build(p, &q), QF_OK);
  ::setenv("QUBOFOLIO_QUBIT_CAP", "10", 1);
  o.algo = "anneal";
  EXPECT_EQ(qf_quantum_run(q, &o, &run), QF_ERR_SIZE_CAP);
  ::unsetenv("QUBOFOLIO_QUBIT_CAP");
  qf_qubo_free(q);
  qf_problem_free(p);
}

}  // namespace
