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

#ifndef QUBOFOLIO_SOLVERS_H_
#define QUBOFOLIO_SOLVERS_H_

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qubofolio/qubo.h"

namespace qubofolio {

struct SolveBudget {
  double time_limit = 10.0;         // seconds, > 0
  std::uint64_t max_iterations = 0; // 0: unlimited
  std::uint64_t seed = 0;
  // Stop as soon as best_energy <= target (1e-9 relative slack).
  std::optional<double> target_energy;
  int workers = 1;

  void validate() const;
};

struct SolveReport {
  std::string solver;
  std::uint64_t seed = 0;
  Assignment best;
  double best_energy = 0.0;
  std::optional<double> lower_bound;
  // (elapsed seconds, energy) at each strict improvement.
  std::vector<std::pair<double, double>> trace;
  double tts = 0.0;
  std::uint64_t iterations = 0;
};

// 64-bit FNV-1a over the bit vector.
std::uint64_t bit_hash(const Assignment& bits);

constexpr int kExactMaxVars = 26;

// Gray-code enumeration of all 2^n assignments.
SolveReport solve_exact(const BlockQubo& qubo, const SolveBudget& budget);

struct BnbOptions {
  int gradient_iterations = 200;
  // Above this size the curvature shift comes from power iteration with a
  // 10% margin instead of a dense eigendecomposition.
  std::int64_t dense_eigen_limit = 2048;
};

// Best-first branch and bound over the convexified box relaxation.
SolveReport solve_bnb(const BlockQubo& qubo, const SolveBudget& budget,
                      const BnbOptions& options = {});

struct AnnealingSchedule {
  std::uint64_t sweeps = 1000;  // per restart
  double initial_temperature = 0.0;  // 0: 90th percentile of |delta|
  double final_ratio = 1e-3;
};

// Restarted Metropolis annealing, one iteration per restart.
SolveReport solve_sa(const BlockQubo& qubo, const SolveBudget& budget,
                     const AnnealingSchedule& schedule = {});

enum class PoolOperator : int { kRestart, kTabu, kCrossover, kMutation };
constexpr int kNumPoolOperators = 4;

struct PoolConfig {
  int pool_size = 16;
  bool restart = true;
  bool tabu = true;
  bool crossover = true;
  bool mutation = true;
  // Half-life of the operator scores, counted in applications of the
  // operator.
  double adaptation_halflife = 16.0;
  int tabu_tenure = 0;   // 0: ceil(sqrt(num_vars))
  int tabu_steps = 0;    // 0: num_vars clamped to [32, 2000]
  double mutation_mean = 3.0;
  bool dedupe = true;

  void validate() const;
};

// Pooled adaptive search. Each worker owns a solution pool and an RNG seeded
// with seed ^ worker_id; the global best is merged by (energy, bit_hash).
SolveReport solve_abs(const BlockQubo& qubo, const SolveBudget& budget,
                      const PoolConfig& pool = {});

// Steepest single-flip descent to a 1-flip local minimum.
Assignment local_descent(const BlockQubo& qubo, Assignment bits);
// In-place variant; returns the number of flips made.
std::uint64_t local_descent(FlipState& state);

// Solver by name: exact, bnb, sa or abs.
SolveReport solve(const std::string& solver, const BlockQubo& qubo,
                  const SolveBudget& budget);

// Pool bookkeeping shared by solve_abs; exposed for tests.
class SolutionPool {
 public:
  struct Member {
    Assignment bits;
    double energy = 0.0;
    std::uint64_t hash = 0;
  };

  SolutionPool(int capacity, bool dedupe) : capacity_(capacity), dedupe_(dedupe) {}

  // Keeps the best `capacity` members ordered by (energy, hash). Returns
  // true when the candidate was inserted.
  bool offer(Assignment bits, double energy);

  const std::vector<Member>& members() const { return members_; }
  int size() const { return static_cast<int>(members_.size()); }
  bool full() const { return size() >= capacity_; }
  double worst_energy() const;

 private:
  int capacity_;
  bool dedupe_;
  std::vector<Member> members_;
};

}  // namespace qubofolio

#endif  // QUBOFOLIO_SOLVERS_H_
