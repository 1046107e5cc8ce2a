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

#ifndef QUBOFOLIO_MODEL_H_
#define QUBOFOLIO_MODEL_H_

#include <cstdint>
#include <optional>
#include <vector>

#include "qubofolio/market_data.h"

namespace qubofolio {

// A binary decision vector over a VariableLayout.
using Assignment = std::vector<std::uint8_t>;

struct FrictionParams {
  double risk_aversion = 0.0;     // q
  double transaction_rate = 0.0;  // delta
  double cash_rate = 0.0;         // rho_c, daily
  double short_rate = 0.0;        // rho_s, daily
  double unit = 1.0;              // u, currency per capital unit
  // P. When unset, build_qubo derives the default from the objective.
  std::optional<double> penalty;
};

struct ProblemSpec {
  int num_assets = 0;       // n
  int horizon = 0;          // T
  int max_blocks = 1;       // k, per asset and direction
  int max_selected = 1;     // B
  int capital_units = 1;    // C
  FrictionParams params;
  BlockPrices prices;
  CovarianceSeries covariances;
  // Risk and profit weight a short block by -1 so long/short pairs hedge.
  bool signed_risk = true;

  // Throws Error(kSpec) naming the offending field.
  void validate() const;
};

enum class VarKind : std::uint8_t { kLong, kShort, kAssetSlack, kCashSlack };

struct VarRole {
  int step = 1;  // 1..T
  VarKind kind = VarKind::kLong;
  int asset = 0;  // x variables only
  int index = 0;  // block 0..k-1 for x variables, bit position for slacks

  bool operator==(const VarRole&) const = default;
};

// Per-step contiguous ordering:
//   [long x: n*k | short x: n*k | asset slack: nb | cash slack: nc]
// with x variables asset-major (asset * k + block).
class VariableLayout {
 public:
  VariableLayout(int n, int T, int k, int B, int C);
  explicit VariableLayout(const ProblemSpec& spec)
      : VariableLayout(spec.num_assets, spec.horizon, spec.max_blocks,
                       spec.max_selected, spec.capital_units) {}

  int num_assets() const { return n_; }
  int horizon() const { return T_; }
  int max_blocks() const { return k_; }
  int asset_slack_bits() const { return nb_; }
  int cash_slack_bits() const { return nc_; }
  int x_width() const { return 2 * k_ * n_; }
  std::int64_t step_width() const { return 2LL * k_ * n_ + nb_ + nc_; }
  std::int64_t total() const { return T_ * step_width(); }

  std::int64_t encode(const VarRole& role) const;
  std::int64_t encode(int step, int asset, int block, VarKind direction) const {
    return encode(VarRole{step, direction, asset, block});
  }
  VarRole decode(std::int64_t index) const;

  // Position-within-step helpers.
  bool is_x(std::int64_t pos) const { return pos < x_width(); }
  int asset_of(std::int64_t pos) const {
    return static_cast<int>((pos % (static_cast<std::int64_t>(k_) * n_)) / k_);
  }
  // tau: +1 for a long block, -1 for a short block.
  int direction_of(std::int64_t pos) const {
    return pos < static_cast<std::int64_t>(k_) * n_ ? 1 : -1;
  }

 private:
  int n_, T_, k_, nb_, nc_;
};

// floor(log2 v) + 1 for v >= 1.
int slack_bits(int value);

struct StepState {
  std::vector<std::vector<std::uint8_t>> long_blocks;   // [asset][block]
  std::vector<std::vector<std::uint8_t>> short_blocks;  // [asset][block]
  std::vector<int> net_position;                        // long - short
  int cash_units = 0;       // sum_c 2^c y
  int asset_slack = 0;      // sum_b 2^b s
  int blocks_selected = 0;  // sum x
  // Currency amounts with economic sign (gains and costs both >= 0 when
  // positive).
  double risk = 0.0;  // unscaled quadratic risk sum p sigma p
  double gross_profit = 0.0;
  double transaction_cost = 0.0;
  double short_cost = 0.0;
  double cash_interest = 0.0;
  double liquidation_cost = 0.0;  // nonzero at t = T only
};

struct Trajectory {
  std::vector<StepState> steps;  // steps[t-1] is step t
};

Trajectory decode_assignment(const ProblemSpec& spec, const Assignment& bits);

struct Residual {
  std::int64_t asset = 0;  // B - sum x - sum 2^b s
  std::int64_t cash = 0;   // C - sum tau x - sum 2^c y
};

std::vector<Residual> constraint_residuals(const ProblemSpec& spec,
                                           const Assignment& bits);
bool is_feasible(const ProblemSpec& spec, const Assignment& bits);

// The all-cash assignment: no positions, cash slack encodes C and asset
// slack encodes B at every step.
Assignment cash_only_assignment(const ProblemSpec& spec);

}  // namespace qubofolio

#endif  // QUBOFOLIO_MODEL_H_
