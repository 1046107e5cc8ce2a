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

#include "qubofolio/io.h"

#include <gtest/gtest.h>

#include <filesystem>
#include <functional>
#include <sstream>

#include "json.hpp"
#include "qubofolio/error.h"
#include "qubofolio/instances.h"
#include "test_util.h"

namespace qubofolio {
namespace {

namespace fs = std::filesystem;

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return static_cast<ErrorCode>(0);
}

std::string message_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.what();
  }
  return "";
}

fs::path scratch_dir(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("qubofolio_io_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

TEST(QuboTextTest, RoundTripIsByteIdentical) {
  const BlockQubo q = build_qubo(toy_problem(2, 2, 1, 1e-4));
  std::ostringstream first;
  write_qubo_text(to_sparse(q), first);
  std::istringstream in(first.str());
  const SparseQubo back = read_qubo_text(in);
  EXPECT_EQ(back, to_sparse(q));
  std::ostringstream second;
  write_qubo_text(back, second);
  EXPECT_EQ(first.str(), second.str());
  EXPECT_EQ(first.str().rfind("p qubo 14 ", 0), 0u);
}

TEST(QuboTextTest, AcceptsCommentsAndSwappedIndices) {
  std::istringstream in("# comment\n\np qubo 3 2 1.5\n2 0 -1\n1 1 0\n0 0 2\n");
  const SparseQubo q = read_qubo_text(in);
  EXPECT_EQ(q.num_vars, 3);
  EXPECT_EQ(q.offset, 1.5);
  ASSERT_EQ(q.terms.size(), 2u);
  EXPECT_EQ(q.terms[0], (SparseTerm{0, 0, 2.0}));
  EXPECT_EQ(q.terms[1], (SparseTerm{0, 2, -1.0}));
}

TEST(QuboTextTest, ParseErrorsCarryLineNumbers) {
  auto read = [](const std::string& text) {
    std::istringstream in(text);
    read_qubo_text(in);
  };
  EXPECT_EQ(code_of([&] { read("p qubo 2 1 0\n0 1 abc\n"); }), ErrorCode::kParse);
  EXPECT_NE(message_of([&] { read("p qubo 2 1 0\n0 1 abc\n"); }).find("line 2"), std::string::npos);
  EXPECT_NE(message_of([&] { read("# x\np qubo 2 1 0\n0 5 1\n"); }).find("line 3"), std::string::npos);
  EXPECT_EQ(code_of([&] { read("p qubo 2 2 0\n0 1 1\n1 0 2\n"); }), ErrorCode::kParse);
  EXPECT_EQ(code_of([&] { read("0 1 1\n"); }), ErrorCode::kParse);
  EXPECT_EQ(code_of([&] { read(""); }), ErrorCode::kParse);
  EXPECT_EQ(code_of([&] { read("p qubo 2 1 0\n0 1\n"); }), ErrorCode::kParse);
}

TEST(IsingTextTest, FieldsOnDiagonal) {
  IsingModel ising;
  ising.num_spins = 3;
  ising.h = {0.5, 0.0, -1.0};
  ising.couplings = {{1, 2, 0.25}, {0, 1, 2.0}};
  ising.offset = -3;
  std::ostringstream out;
  write_ising_text(ising, out);
  EXPECT_EQ(out.str(), "p ising 3 4 -3\n0 0 0.5\n0 1 2\n1 2 0.25\n2 2 -1\n");
}

TEST(ProblemJsonTest, RoundTrip) {
  ProblemSpec s = synthetic_problem(3, 2, 2, 4, 3, 5, 1e-4, 10);
  s.params.penalty = 77.0;
  s.signed_risk = false;
  const std::string text = problem_to_json(s);
  const ProblemSpec back = problem_from_json(text);
  EXPECT_EQ(problem_to_json(back), text);
  EXPECT_EQ(back.params.penalty, 77.0);
  EXPECT_FALSE(back.signed_risk);
  EXPECT_EQ(back.prices.p, s.prices.p);
  EXPECT_EQ(back.covariances.sigma[1], s.covariances.sigma[1]);
}

TEST(ProblemJsonTest, DefaultsAndOptionalPenalty) {
  const std::string text =
      R"({"n":1,"T":1,"k":1,"B":1,"C":1,"P":null,"prices":[[1,1]],"covariances":[[[0]]]})";
  const ProblemSpec s = problem_from_json(text);
  EXPECT_FALSE(s.params.penalty.has_value());
  EXPECT_EQ(s.params.unit, 1.0);
  EXPECT_EQ(s.params.risk_aversion, 0.0);
  EXPECT_TRUE(s.signed_risk);
}

TEST(ProblemJsonTest, FieldPathErrors) {
  const std::string bad_price =
      R"({"n":2,"T":1,"k":1,"B":1,"C":1,"prices":[[1,1],[1,"x"]],"covariances":[[[0,0],[0,0]]]})";
  EXPECT_EQ(code_of([&] { problem_from_json(bad_price); }), ErrorCode::kSpec);
  EXPECT_EQ(message_of([&] { problem_from_json(bad_price); }), "prices[1][1]: expected a number");
  const std::string short_cov =
      R"({"n":1,"T":2,"k":1,"B":1,"C":1,"prices":[[1,1,1]],"covariances":[[[0]]]})";
  EXPECT_NE(message_of([&] { problem_from_json(short_cov); }).find("covariances"), std::string::npos);
  EXPECT_NE(message_of([&] { problem_from_json(R"({"T":1})"); }).find("n: missing"), std::string::npos);
  EXPECT_NE(message_of([&] { problem_from_json(R"({"n":1.5})"); }).find("n: expected an integer"),
            std::string::npos);
  EXPECT_EQ(code_of([&] { problem_from_json("{not json"); }), ErrorCode::kParse);
}

TEST(ProblemJsonTest, PriceFileRelativeToConfig) {
  const fs::path dir = scratch_dir("csv");
  write_file((dir / "prices.csv").string(), [] {
    std::ostringstream out;
    write_prices_csv(synthetic_prices(4, 40, 3), out);
    return out.str();
  }());
  write_file((dir / "config.json").string(),
             R"({"n":2,"T":3,"k":1,"B":2,"C":1,"u":100,"price_csv":"prices.csv","cov_window":10})");
  const ProblemSpec s = load_problem((dir / "config.json").string());
  EXPECT_EQ(s.num_assets, 2);
  EXPECT_EQ(s.prices.p.cols(), 4);
  EXPECT_NEAR(s.prices.p(0, 0), 100.0, 1e-12);
  EXPECT_EQ(s.covariances.horizon(), 3);
  EXPECT_EQ(code_of([&] { load_problem((dir / "absent.json").string()); }), ErrorCode::kIo);
}

TEST(RleTest, RoundTrip) {
  EXPECT_EQ(rle_encode({0, 0, 0, 1, 1}), "0*3,1*2");
  EXPECT_EQ(rle_encode({}), "");
  std::mt19937_64 rng(3);
  for (int k = 0; k < 20; ++k) {
    const Assignment bits = testing::random_bits(rng, 1 + k * 7);
    EXPECT_EQ(rle_decode(rle_encode(bits)), bits);
  }
  EXPECT_EQ(code_of([] { rle_decode("2*3"); }), ErrorCode::kParse);
  EXPECT_EQ(code_of([] { rle_decode("1*0"); }), ErrorCode::kParse);
  EXPECT_EQ(code_of([] { rle_decode("1*x"); }), ErrorCode::kParse);
}

TEST(ReportJsonTest, RoundTrip) {
  SolveReport r;
  r.solver = "abs";
  r.seed = 42;
  r.best = {1, 0, 1, 1};
  r.best_energy = -12.5;
  r.lower_bound = -13.0;
  r.trace = {{0.001, -3.0}, {0.25, -12.5}};
  r.tts = 0.25;
  r.iterations = 17;
  const std::string text = report_to_json(r);
  const SolveReport back = report_from_json(text);
  EXPECT_EQ(report_to_json(back), text);
  EXPECT_EQ(back.best, r.best);
  EXPECT_EQ(back.lower_bound, r.lower_bound);
  r.lower_bound.reset();
  EXPECT_FALSE(report_from_json(report_to_json(r)).lower_bound.has_value());
  EXPECT_EQ(code_of([] { report_from_json(R"({"solver":1})"); }), ErrorCode::kParse);
}

TEST(BqpJsonTest, ConstraintRows) {
  const ProblemSpec s = toy_problem(2, 2, 0);
  const auto root = nlohmann::json::parse(bqp_to_json(build_bqp(s)));
  EXPECT_EQ(root["num_vars"], 14);
  const auto& rows = root["constraints"];
  ASSERT_EQ(rows.size(), 4u);
  EXPECT_EQ(rows[0]["kind"], "asset_count");
  EXPECT_EQ(rows[0]["rhs"], 2);
  EXPECT_EQ(rows[1]["kind"], "cash");
  EXPECT_EQ(rows[3]["step"], 2);
}

TEST(MetricsJsonTest, SharpeMarker) {
  const ProblemSpec s = toy_problem(2, 2, 0);
  const Assignment bits = cash_only_assignment(s);
  const auto root = nlohmann::json::parse(
      metrics_to_json(economic_metrics(s, bits), objective_breakdown(s, bits), -20.0));
  EXPECT_EQ(root["sharpe"], "no_risk");
  EXPECT_EQ(root["feasible"], true);
  EXPECT_EQ(root["objective"], -20.0);
}

}  // namespace
}  // namespace qubofolio
