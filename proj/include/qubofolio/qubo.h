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

#ifndef QUBOFOLIO_QUBO_H_
#define QUBOFOLIO_QUBO_H_

#include <cstdint>
#include <vector>

#include "qubofolio/model.h"

namespace qubofolio {

// Block-banded QUBO over num_steps * width variables:
//
//   E(x) = offset + sum_i linear[i] x_i
//        + sum_t sum_{i,j in step t} block_t[i][j] x_i x_j
//        + sum_{t>=1} sum_p cross_{t-1}[p] x_{t-1,p} x_{t,p}
//
// Each block is a dense symmetric width x width matrix (row-major), so the
// coefficient of x_i x_j for i != j inside a step is 2 * block[i][j].
// Cross couplings join the same position in adjacent steps.
struct BlockQubo {
  int num_steps = 0;
  std::int64_t width = 0;
  std::vector<std::vector<double>> blocks;
  std::vector<std::vector<double>> cross;  // num_steps - 1 entries
  std::vector<double> linear;
  double offset = 0.0;

  BlockQubo() = default;
  BlockQubo(int steps, std::int64_t step_width);

  std::int64_t num_vars() const { return num_steps * width; }
  double& at(int step, std::int64_t i, std::int64_t j) {
    return blocks[step][i * width + j];
  }
  double at(int step, std::int64_t i, std::int64_t j) const {
    return blocks[step][i * width + j];
  }
  // Adds `value` to the coefficient of x_a x_b (a != b) for two variables
  // of the same step, keeping the block symmetric.
  void add_pair(std::int64_t a, std::int64_t b, double value);
  // Adds `value` to the coefficient of x_a (diagonal of its block).
  void add_diagonal(std::int64_t a, double value);
};

// Upper-triangular coefficient list. Diagonal entries fold the linear and
// block-diagonal parts: E(x) = offset + sum value * x_i * x_j.
struct SparseTerm {
  std::int64_t i = 0;
  std::int64_t j = 0;
  double value = 0.0;

  bool operator==(const SparseTerm&) const = default;
};

struct SparseQubo {
  std::int64_t num_vars = 0;
  std::vector<SparseTerm> terms;  // sorted by (i, j), i <= j, no zeros
  double offset = 0.0;

  bool operator==(const SparseQubo&) const = default;
};

enum class ConstraintKind { kAssetCount, kCash };

struct ConstraintRow {
  int step = 1;
  ConstraintKind kind = ConstraintKind::kAssetCount;
  std::vector<std::int64_t> index;
  std::vector<double> coefficient;
  double rhs = 0.0;
};

// Objective without the penalty expansion plus the explicit equality rows.
struct BqpView {
  BlockQubo objective;
  std::vector<ConstraintRow> rows;  // asset row then cash row, per step
};

struct IsingModel {
  std::int64_t num_spins = 0;
  std::vector<double> h;
  std::vector<SparseTerm> couplings;  // i < j
  double offset = 0.0;
};

struct ObjectiveBreakdown {
  double risk = 0.0;  // q-weighted
  double profit = 0.0;
  double transaction = 0.0;
  double liquidation = 0.0;
  double cash_interest = 0.0;
  double short_cost = 0.0;
  double penalty = 0.0;

  double total() const {
    return risk + profit + transaction + liquidation + cash_interest +
           short_cost + penalty;
  }
};

// Penalty-free portfolio objective.
BlockQubo build_objective(const ProblemSpec& spec);
// 10 * (largest absolute single-step objective coefficient) * (B + C).
double default_penalty(const ProblemSpec& spec);
double resolve_penalty(const ProblemSpec& spec);
BlockQubo build_qubo(const ProblemSpec& spec);
BqpView build_bqp(const ProblemSpec& spec);

double energy(const BlockQubo& qubo, const Assignment& bits);
// Objective of a BqpView ignoring its rows.
double bqp_objective(const BqpView& bqp, const Assignment& bits);

// From-scratch single-flip energy changes, E(flip(x, i)) - E(x).
std::vector<double> delta_energies(const BlockQubo& qubo, const Assignment& bits);

// Largest absolute coefficient touching variable i; used as the scale of
// cancellation error in that variable's delta.
double row_scale(const BlockQubo& qubo, std::int64_t i);

// Assignment with its energy and all single-flip deltas kept current.
// flip(i) costs O(width): one block row plus the two cross neighbours.
class FlipState {
 public:
  FlipState(const BlockQubo& qubo, Assignment bits);

  const Assignment& bits() const { return bits_; }
  std::uint8_t bit(std::int64_t i) const { return bits_[i]; }
  double energy() const { return static_cast<double>(energy_); }
  double delta(std::int64_t i) const {
    return static_cast<double>(bits_[i] ? -field_[i] : field_[i]);
  }
  std::vector<double> deltas() const;
  std::int64_t size() const { return static_cast<std::int64_t>(bits_.size()); }
  const BlockQubo& qubo() const { return *qubo_; }

  void flip(std::int64_t i);
  // Replaces the assignment and rebuilds caches from scratch.
  void reset(Assignment bits);

 private:
  const BlockQubo* qubo_;
  Assignment bits_;
  // field_[i] = dE/dx_i holding the rest fixed, so delta = (1 - 2 x_i) field.
  std::vector<long double> field_;
  long double energy_ = 0.0L;
};

SparseQubo to_sparse(const BlockQubo& qubo);
// Recovers block structure: picks the smallest step width dividing num_vars
// for which every off-diagonal term lies inside a step or couples the same
// position of adjacent steps. Falls back to one dense block.
BlockQubo from_sparse(const SparseQubo& sparse);
double sparse_energy(const SparseQubo& sparse, const Assignment& bits);

IsingModel to_ising(const SparseQubo& qubo);
IsingModel to_ising(const BlockQubo& qubo);
// spins[i] in {-1, +1}.
double ising_energy(const IsingModel& ising, const std::vector<int>& spins);

ObjectiveBreakdown objective_breakdown(const ProblemSpec& spec,
                                       const Assignment& bits);

}  // namespace qubofolio

#endif  // QUBOFOLIO_QUBO_H_
