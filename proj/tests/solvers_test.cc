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

#include "qubofolio/solvers.h"

#include <gtest/gtest.h>

#include <random>
#include <set>

#include "qubofolio/error.h"
#include "qubofolio/instances.h"
#include "test_util.h"

namespace qubofolio {
namespace {

using testing::brute_force_minimum;
using testing::near_rel;
using testing::random_bits;
using testing::random_block_qubo;
using testing::random_dense_qubo;

SolveBudget budget_with(double seconds, std::uint64_t seed = 0) {
  SolveBudget b;
  b.time_limit = seconds;
  b.seed = seed;
  return b;
}

void expect_trace_invariants(const SolveReport& r) {
  ASSERT_FALSE(r.trace.empty());
  for (std::size_t k = 1; k < r.trace.size(); ++k) {
    EXPECT_LT(r.trace[k].second, r.trace[k - 1].second);
    EXPECT_GE(r.trace[k].first, r.trace[k - 1].first);
  }
  EXPECT_EQ(r.tts, r.trace.back().first);
  EXPECT_EQ(r.trace.back().second, r.best_energy);
}

TEST(BudgetTest, Validation) {
  SolveBudget b;
  b.time_limit = 0;
  EXPECT_THROW(b.validate(), Error);
  b.time_limit = 1;
  b.workers = 0;
  EXPECT_THROW(b.validate(), Error);
  const BlockQubo q(1, 2);
  EXPECT_THROW(solve("gurobi", q, SolveBudget{}), Error);
}

TEST(ExactTest, SingleVariable) {
  for (double c : {-3.0, 2.0}) {
    BlockQubo q(1, 1);
    q.offset = 1.0;
    q.linear[0] = c;
    q.at(0, 0, 0) = 0.5;
    const SolveReport r = solve_exact(q, SolveBudget{});
    EXPECT_EQ(r.best_energy, std::min(1.0, 1.0 + c + 0.5));
    EXPECT_EQ(*r.lower_bound, r.best_energy);
  }
}

TEST(ExactTest, ZeroQubo) {
  BlockQubo q(2, 3);
  q.offset = 4.0;
  const SolveReport r = solve_exact(q, SolveBudget{});
  EXPECT_EQ(r.best_energy, 4.0);
  expect_trace_invariants(r);
}

TEST(ExactTest, MatchesBruteForce) {
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 10; ++trial) {
    const BlockQubo q = trial % 2 ? random_dense_qubo(rng, 12) : random_block_qubo(rng, 3, 4);
    const SolveReport r = solve_exact(q, SolveBudget{});
    EXPECT_TRUE(near_rel(r.best_energy, brute_force_minimum(q), 1e-12));
    EXPECT_EQ(r.lower_bound, r.best_energy);
    EXPECT_EQ(r.best_energy, energy(q, r.best));
    expect_trace_invariants(r);
  }
}

TEST(ExactTest, SizeCap) {
  const BlockQubo q(1, kExactMaxVars + 1);
  try {
    solve_exact(q, SolveBudget{});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kSizeCap);
  }
}

TEST(BnbTest, SeparableConvexSolvedAtRoot) {
  BlockQubo q(1, 8);
  for (int i = 0; i < 8; ++i) {
    q.at(0, i, i) = 1.0 + i;
    q.linear[i] = -3.0 - 2.0 * i;
  }
  const SolveReport r = solve_bnb(q, budget_with(5));
  EXPECT_EQ(r.iterations, 1u);
  EXPECT_DOUBLE_EQ(r.best_energy, brute_force_minimum(q));
  EXPECT_DOUBLE_EQ(*r.lower_bound, r.best_energy);
}

TEST(BnbTest, MatchesExactAndBoundIsValid) {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 10; ++trial) {
    const BlockQubo q = trial % 2 ? random_dense_qubo(rng, 15) : random_block_qubo(rng, 3, 5);
    const double optimum = solve_exact(q, SolveBudget{}).best_energy;
    const SolveReport r = solve_bnb(q, budget_with(30));
    EXPECT_TRUE(near_rel(r.best_energy, optimum, 1e-9));
    ASSERT_TRUE(r.lower_bound.has_value());
    EXPECT_LE(*r.lower_bound, optimum + 1e-9 * std::abs(optimum));
    EXPECT_LE(*r.lower_bound, r.best_energy);
    expect_trace_invariants(r);
  }
}

TEST(BnbTest, TruncatedRunStillReportsValidBound) {
  std::mt19937_64 rng(3);
  const BlockQubo q = random_dense_qubo(rng, 20);
  const double optimum = solve_exact(q, SolveBudget{}).best_energy;
  SolveBudget b = budget_with(30);
  b.max_iterations = 5;
  const SolveReport r = solve_bnb(q, b);
  ASSERT_TRUE(r.lower_bound.has_value());
  EXPECT_LE(*r.lower_bound, optimum + 1e-9);
  EXPECT_GE(r.best_energy, optimum - 1e-9);
}

TEST(BnbTest, PortfolioInstance) {
  const ProblemSpec s = toy_problem(2, 2, 4, 1e-4);
  const BlockQubo q = build_qubo(s);
  const SolveReport exact = solve_exact(q, SolveBudget{});
  const SolveReport r = solve_bnb(q, budget_with(30));
  EXPECT_TRUE(near_rel(r.best_energy, exact.best_energy, 1e-9));
  EXPECT_LE(*r.lower_bound, exact.best_energy + 1e-9 * std::abs(exact.best_energy));
}

TEST(SaTest, ZeroQubo) {
  BlockQubo q(1, 5);
  q.offset = -2.0;
  SolveBudget b = budget_with(5);
  b.max_iterations = 3;
  const SolveReport r = solve_sa(q, b);
  EXPECT_EQ(r.best_energy, -2.0);
  EXPECT_EQ(r.iterations, 3u);
}

TEST(SaTest, ReachesOptimumOnSmallInstances) {
  std::mt19937_64 rng(4);
  int hits = 0;
  for (int trial = 0; trial < 20; ++trial) {
    const BlockQubo q = random_dense_qubo(rng, 20);
    const double optimum = solve_exact(q, SolveBudget{}).best_energy;
    SolveBudget b = budget_with(5, trial);
    b.target_energy = optimum;
    const SolveReport r = solve_sa(q, b);
    hits += near_rel(r.best_energy, optimum, 1e-9);
    expect_trace_invariants(r);
  }
  EXPECT_GE(hits, 18);
}

TEST(SaTest, DeterministicUnderFixedSeed) {
  std::mt19937_64 rng(5);
  const BlockQubo q = random_block_qubo(rng, 4, 6);
  SolveBudget b = budget_with(60, 99);
  b.max_iterations = 5;
  const SolveReport a = solve_sa(q, b);
  const SolveReport c = solve_sa(q, b);
  EXPECT_EQ(a.best, c.best);
  EXPECT_EQ(a.best_energy, c.best_energy);
  ASSERT_EQ(a.trace.size(), c.trace.size());
  for (std::size_t k = 0; k < a.trace.size(); ++k) {
    EXPECT_EQ(a.trace[k].second, c.trace[k].second);
  }
}

TEST(AbsTest, MatchesExactOnSmallInstances) {
  std::mt19937_64 rng(6);
  int hits = 0;
  for (int trial = 0; trial < 20; ++trial) {
    const BlockQubo q = random_dense_qubo(rng, 22);
    const double optimum = solve_exact(q, SolveBudget{}).best_energy;
    SolveBudget b = budget_with(5, trial);
    b.target_energy = optimum;
    const SolveReport r = solve_abs(q, b);
    hits += near_rel(r.best_energy, optimum, 1e-9);
    expect_trace_invariants(r);
    EXPECT_LE(r.tts, 5.0);
  }
  EXPECT_GE(hits, 19);
}

TEST(AbsTest, DeterministicUnderFixedSeed) {
  std::mt19937_64 rng(7);
  const BlockQubo q = random_block_qubo(rng, 3, 8);
  SolveBudget b = budget_with(60, 5);
  b.max_iterations = 200;
  const SolveReport a = solve_abs(q, b);
  const SolveReport c = solve_abs(q, b);
  EXPECT_EQ(a.best, c.best);
  EXPECT_EQ(a.iterations, 200u);
  ASSERT_EQ(a.trace.size(), c.trace.size());
  for (std::size_t k = 0; k < a.trace.size(); ++k) {
    EXPECT_EQ(a.trace[k].second, c.trace[k].second);
  }
}

TEST(AbsTest, MultipleWorkersAgreeOnOptimum) {
  std::mt19937_64 rng(8);
  const BlockQubo q = random_dense_qubo(rng, 18);
  const double optimum = solve_exact(q, SolveBudget{}).best_energy;
  SolveBudget b = budget_with(5, 1);
  b.workers = 4;
  b.target_energy = optimum;
  EXPECT_TRUE(near_rel(solve_abs(q, b).best_energy, optimum, 1e-9));
  b.target_energy.reset();
  b.max_iterations = 400;
  const SolveReport a = solve_abs(q, b);
  const SolveReport c = solve_abs(q, b);
  EXPECT_EQ(a.best, c.best);
  EXPECT_EQ(a.best_energy, c.best_energy);
}

TEST(AbsTest, SingleOperatorConfigurations) {
  std::mt19937_64 rng(9);
  const BlockQubo q = random_dense_qubo(rng, 14);
  const double optimum = solve_exact(q, SolveBudget{}).best_energy;
  for (int only = 0; only < 4; ++only) {
    PoolConfig config;
    config.restart = only == 0;
    config.tabu = only == 1;
    config.crossover = only == 2;
    config.mutation = only == 3;
    SolveBudget b = budget_with(5, 3);
    b.target_energy = optimum;
    const SolveReport r = solve_abs(q, b, config);
    EXPECT_GE(r.best_energy, optimum - 1e-9);
    expect_trace_invariants(r);
  }
  PoolConfig none;
  none.restart = none.tabu = none.crossover = none.mutation = false;
  EXPECT_THROW(solve_abs(q, SolveBudget{}, none), Error);
}

TEST(PoolTest, OrderedDedupedAndBounded) {
  SolutionPool pool(3, true);
  EXPECT_TRUE(pool.offer({0, 1}, 5.0));
  EXPECT_FALSE(pool.offer({0, 1}, 5.0));
  EXPECT_TRUE(pool.offer({1, 1}, 2.0));
  EXPECT_TRUE(pool.offer({1, 0}, 7.0));
  EXPECT_TRUE(pool.full());
  EXPECT_FALSE(pool.offer({0, 0}, 9.0));
  EXPECT_TRUE(pool.offer({0, 0}, 1.0));
  ASSERT_EQ(pool.size(), 3);
  EXPECT_EQ(pool.members()[0].energy, 1.0);
  EXPECT_EQ(pool.members()[2].energy, 5.0);
  EXPECT_EQ(pool.worst_energy(), 5.0);
  std::set<std::uint64_t> hashes;
  for (const auto& m : pool.members()) hashes.insert(m.hash);
  EXPECT_EQ(hashes.size(), 3u);
}

TEST(LocalDescentTest, LocalMinimumUnchanged) {
  std::mt19937_64 rng(10);
  const BlockQubo q = random_dense_qubo(rng, 12);
  const Assignment m = local_descent(q, random_bits(rng, 12));
  EXPECT_EQ(local_descent(q, m), m);
}

TEST(LocalDescentTest, SetsSingleNegativeBit) {
  BlockQubo q(1, 5);
  q.linear[3] = -1.0;
  const Assignment out = local_descent(q, Assignment(5, 0));
  EXPECT_EQ(out, (Assignment{0, 0, 0, 1, 0}));
}

TEST(LocalDescentTest, NeverIncreasesEnergy) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const BlockQubo q = random_dense_qubo(rng, 12);
    const Assignment start = random_bits(rng, 12);
    const Assignment out = local_descent(q, start);
    EXPECT_LE(energy(q, out), energy(q, start) + 1e-12);
    for (double d : delta_energies(q, out)) EXPECT_GE(d, 0.0);
  }
}

}  // namespace
}  // namespace qubofolio
