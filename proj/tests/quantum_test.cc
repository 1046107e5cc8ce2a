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

#include "qubofolio/quantum.h"

#include <gtest/gtest.h>

#include <cmath>
#include <cstdlib>
#include <numbers>
#include <random>

#include "qubofolio/error.h"
#include "qubofolio/instances.h"
#include "qubofolio/solvers.h"
#include "test_util.h"

namespace qubofolio {
namespace {

IsingModel random_ising(std::mt19937_64& rng, int m, double density = 1.0) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  IsingModel ising;
  ising.num_spins = m;
  ising.h.resize(m);
  for (auto& h : ising.h) h = u(rng);
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      if (coin(rng) < density) ising.couplings.push_back({i, j, u(rng)});
    }
  }
  ising.offset = u(rng);
  return ising;
}

IsingModel single_field(double h) {
  IsingModel ising;
  ising.num_spins = 1;
  ising.h = {h};
  return ising;
}

TEST(CapTest, EnvironmentOverride) {
  ::unsetenv("QUBOFOLIO_QUBIT_CAP");
  EXPECT_EQ(qubit_cap(), 20);
  ::setenv("QUBOFOLIO_QUBIT_CAP", "6", 1);
  EXPECT_EQ(qubit_cap(), 6);
  try {
    check_qubit_cap(7);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kSizeCap);
    EXPECT_NE(std::string(e.what()).find("cap is 6"), std::string::npos);
  }
  ::setenv("QUBOFOLIO_QUBIT_CAP", "junk", 1);
  EXPECT_EQ(qubit_cap(), 20);
  ::unsetenv("QUBOFOLIO_QUBIT_CAP");
  EXPECT_THROW(StateVector(21), Error);
}

TEST(StateVectorTest, GatesMatchClosedForms) {
  StateVector s(1);
  s.rx(0, std::numbers::pi);  // |0> -> -i|1>
  EXPECT_NEAR(std::abs(s.amplitudes()[1] - std::complex<double>(0, -1)), 0.0, 1e-15);
  StateVector r(1);
  r.ry(0, std::numbers::pi / 2);
  EXPECT_NEAR(r.amplitudes()[0].real(), std::sqrt(0.5), 1e-15);
  EXPECT_NEAR(r.amplitudes()[1].real(), std::sqrt(0.5), 1e-15);
  StateVector u = StateVector::uniform(2);
  u.cz(0, 1);
  EXPECT_NEAR(u.amplitudes()[3].real(), -0.5, 1e-15);
  EXPECT_NEAR(u.amplitudes()[1].real(), 0.5, 1e-15);
  StateVector p = StateVector::uniform(1);
  p.phase({0.0, 1.0}, std::numbers::pi);
  EXPECT_NEAR(p.amplitudes()[1].real(), -std::sqrt(0.5), 1e-15);
}

TEST(DiagonalizeTest, SignConvention) {
  const DiagonalCost c = diagonalize_cost(single_field(1.0));
  ASSERT_EQ(c.energies.size(), 2u);
  EXPECT_EQ(c.energies[0], -1.0);  // bit 0 is spin -1
  EXPECT_EQ(c.energies[1], 1.0);
  EXPECT_EQ(basis_bits(0b0110, 4), "0110");
  EXPECT_EQ(basis_bits(0b0001, 4), "1000");
}

TEST(DiagonalizeTest, ZeroFieldsGiveOffset) {
  IsingModel ising;
  ising.num_spins = 3;
  ising.h.assign(3, 0.0);
  ising.offset = 2.5;
  for (double e : diagonalize_cost(ising).energies) EXPECT_EQ(e, 2.5);
}

TEST(DiagonalizeTest, MatchesDirectEvaluation) {
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 10; ++trial) {
    const IsingModel ising = random_ising(rng, 3);
    const DiagonalCost c = diagonalize_cost(ising);
    for (std::uint64_t z = 0; z < 8; ++z) {
      std::vector<int> spins(3);
      for (int q = 0; q < 3; ++q) spins[q] = (z >> q) & 1 ? 1 : -1;
      EXPECT_NEAR(c.energies[z], ising_energy(ising, spins), 1e-15);
    }
  }
}

TEST(SamplingTest, FrequenciesWithinThreeSigma) {
  const std::vector<double> probs = {0.1, 0.2, 0.3, 0.4};
  std::mt19937_64 rng(3);
  const int shots = 20000;
  std::vector<int> counts(4, 0);
  for (auto z : sample_states(probs, shots, rng)) ++counts[z];
  for (int z = 0; z < 4; ++z) {
    const double sigma = std::sqrt(shots * probs[z] * (1 - probs[z]));
    EXPECT_LE(std::abs(counts[z] - shots * probs[z]), 3 * sigma);
  }
}

TEST(NelderMeadTest, MinimizesQuadratic) {
  auto f = [](const std::vector<double>& x) {
    return (x[0] - 1) * (x[0] - 1) + 2 * (x[1] + 0.5) * (x[1] + 0.5);
  };
  const auto r = minimize_nelder_mead(f, {3.0, 3.0}, 0.5, 2000, 1e-14);
  EXPECT_NEAR(r.x[0], 1.0, 1e-5);
  EXPECT_NEAR(r.x[1], -0.5, 1e-5);
}

TEST(NelderMeadTest, FlatFunctionReturnsStart) {
  const auto r = minimize_nelder_mead([](const std::vector<double>&) { return 3.0; },
                                      {0.25, -1.0}, 0.1, 100, 1e-12);
  EXPECT_EQ(r.x, (std::vector<double>{0.25, -1.0}));
  EXPECT_EQ(r.evaluations, 3);
}

TEST(QaoaTest, ZeroLayersIsUniform) {
  std::mt19937_64 rng(2);
  const IsingModel ising = random_ising(rng, 4);
  const QuantumRun run = qaoa_run(ising, {}, 100, 0);
  const DiagonalCost c = diagonalize_cost(ising);
  double mean = 0.0;
  for (double e : c.energies) mean += e / c.energies.size();
  EXPECT_NEAR(run.expectation, mean, 1e-12);
  // Traceless fields average to the offset.
  EXPECT_NEAR(run.expectation, ising.offset, 1e-12);
}

TEST(QaoaTest, SingleQubitReachesPole) {
  // p = 1 on h = [1]: gamma = pi/4, beta = -pi/4 maps |+> onto |0> (spin -1).
  const QuantumRun run = qaoa_run(single_field(1.0), {{std::numbers::pi / 4}, {-std::numbers::pi / 4}}, 0, 0);
  EXPECT_NEAR(run.ground_probability, 1.0, 1e-12);
  const QuantumRun opt = qaoa_optimize(single_field(1.0), 1, {}, 0, 0);
  EXPECT_LE(opt.expectation, -0.99);
}

TEST(QaoaTest, AntiferromagneticPairSamplesGroundStates) {
  IsingModel ising;
  ising.num_spins = 2;
  ising.h = {0.0, 0.0};
  ising.couplings = {{0, 1, 1.0}};
  const QuantumRun run = qaoa_optimize(ising, 2, {}, 500, 7);
  EXPECT_TRUE(run.best_bits == "01" || run.best_bits == "10") << run.best_bits;
  EXPECT_EQ(run.best_energy, -1.0);
  EXPECT_GT(run.ground_probability, 0.9);
}

TEST(QaoaTest, ZeroHamiltonianKeepsStart) {
  IsingModel ising;
  ising.num_spins = 2;
  ising.h = {0.0, 0.0};
  ising.offset = 1.5;
  const QuantumRun run = qaoa_optimize(ising, 1, {}, 10, 0);
  EXPECT_NEAR(run.expectation, 1.5, 1e-12);
}

TEST(QaoaTest, EightQubitRandomInstances) {
  // Best-of-samples within 5% of the ground energy in most trials.
  int good = 0;
  const int trials = 5;
  for (int t = 0; t < trials; ++t) {
    std::mt19937_64 rng(100 + t);
    const IsingModel ising = random_ising(rng, 8, 0.5);
    const QuantumRun run = qaoa_optimize(ising, 3, {}, 1024, t);
    const double g = run.ground_energy;
    good += std::abs(run.best_energy - g) <= 0.05 * std::abs(g);
  }
  EXPECT_GE(good, 4);
}

TEST(VqeTest, SingleQubitReachesGround) {
  const QuantumRun run = vqe_run(single_field(1.0), 1, {}, 100, 0);
  EXPECT_NEAR(run.expectation, -1.0, 1e-6);
  EXPECT_EQ(run.best_bits, "0");
}

TEST(VqeTest, ZeroHamiltonianIsOffset) {
  IsingModel ising;
  ising.num_spins = 3;
  ising.h.assign(3, 0.0);
  ising.offset = -0.75;
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> a(-3, 3);
  for (int k = 0; k < 5; ++k) {
    std::vector<double> theta(6);
    for (auto& x : theta) x = a(rng);
    const DiagonalCost c = diagonalize_cost(ising);
    EXPECT_NEAR(c.expectation(vqe_state(3, 2, theta).probabilities()), -0.75, 1e-12);
  }
}

TEST(VqeTest, VariationalBound) {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 3; ++t) {
    const IsingModel ising = random_ising(rng, 6);
    const QuantumRun run = vqe_run(ising, 2, {1, 400, 1e-10}, 64, t);
    EXPECT_GE(run.expectation, run.ground_energy - 1e-12);
    for (double e : run.expectation_trace) EXPECT_GE(e, run.ground_energy - 1e-12);
  }
}

TEST(AnnealTest, ScheduleValidation) {
  AnnealSchedule s;
  EXPECT_EQ(s.steps(), 5000);
  s.dt = 0.03;
  EXPECT_THROW(s.steps(), Error);
  s.dt = 60;
  EXPECT_THROW(s.steps(), Error);
  s.dt = -1;
  EXPECT_THROW(s.steps(), Error);
  s.envelope = Envelope::kCosine;
  EXPECT_NEAR(s.driver(0.0), 1.0, 1e-15);
  EXPECT_NEAR(s.driver(1.0), 0.0, 1e-15);
  EXPECT_NEAR(s.problem(0.5), 0.5, 1e-15);
}

TEST(AnnealTest, ZeroProblemStaysUniform) {
  IsingModel ising;
  ising.num_spins = 3;
  ising.h.assign(3, 0.0);
  AnnealSchedule s;
  s.total_time = 5;
  s.dt = 0.01;
  const QuantumRun run = anneal_run(ising, s, 0, 0);
  // Ground is every state, so the probability is 1; check flatness directly.
  EXPECT_NEAR(run.ground_probability, 1.0, 1e-12);
  const QuantumRun sampled = anneal_run(ising, s, 8000, 3);
  for (const auto& [bits, count] : sampled.samples_hist) {
    EXPECT_NEAR(count, 1000, 3 * std::sqrt(8000 * 0.125 * 0.875));
  }
}

IsingModel two_qubit(double h0, double h1, double j) {
  IsingModel ising;
  ising.num_spins = 2;
  ising.h = {h0, h1};
  ising.couplings = {{0, 1, j}};
  return ising;
}

TEST(AnnealTest, TwoQubitGroundProbability) {
  AnnealSchedule s;
  s.total_time = 50;
  s.dt = 0.01;
  EXPECT_GE(anneal_run(two_qubit(0.5, -0.3, 0.8), s, 0, 0).ground_probability, 0.99);
  EXPECT_GE(anneal_run(two_qubit(-1.0, -0.7, 0.04), s, 0, 0).ground_probability, 0.99);
}

TEST(AnnealTest, MatchesReferencePropagation) {
  // Reference from an independent dense-matrix propagation with exact
  // per-step exponentials (dt = 0.001).
  AnnealSchedule s;
  s.total_time = 50;
  s.dt = 0.01;
  const double p = anneal_run(two_qubit(-0.961324, 0.744188, -0.520846), s, 0, 0).ground_probability;
  EXPECT_NEAR(p, 0.98588218, 1e-4);
}

TEST(AnnealTest, NormPreserved) {
  std::mt19937_64 rng(7);
  const IsingModel ising = random_ising(rng, 5);
  AnnealSchedule s;
  s.total_time = 10;
  s.dt = 0.01;
  double worst = 0.0;
  anneal_run(ising, s, 0, 0, [&](const StateVector& st) {
    worst = std::max(worst, std::abs(st.norm_squared() - 1.0));
  });
  EXPECT_LE(worst, 1e-9);
}

TEST(AnnealTest, ToyPortfolioMatchesExact) {
  const ProblemSpec spec = toy_problem(2, 2, 0);
  const BlockQubo q = build_qubo(spec);
  const double exact = solve_exact(q, SolveBudget{}).best_energy;
  const QuantumRun run = anneal_run(to_ising(q), AnnealSchedule{}, 1024, 0);
  EXPECT_TRUE(testing::near_rel(run.best_energy, exact, 1e-9));
  EXPECT_TRUE(testing::near_rel(run.ground_energy, exact, 1e-9));
}

}  // namespace
}  // namespace qubofolio
