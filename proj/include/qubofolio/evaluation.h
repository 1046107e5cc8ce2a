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

#ifndef QUBOFOLIO_EVALUATION_H_
#define QUBOFOLIO_EVALUATION_H_

#include <array>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "qubofolio/model.h"
#include "qubofolio/solvers.h"

namespace qubofolio {

// The eight risk-aversion values of the benchmark sweep.
inline constexpr std::array<double, 8> kBenchmarkQGrid = {
    0.0, 1e-6, 1e-5, 5e-5, 1e-4, 5e-4, 1e-3, 1e-2};

// 100 * |objective - lower_bound| / |objective|. Throws for objective 0.
double gap(double objective, double lower_bound);

// Timestamp of the first trace event reaching best_energy.
double tts(const SolveReport& report);

enum class SharpeStatus { kValue, kNoRisk, kUndefined };

struct Metrics {
  double gross_profit = 0.0;
  double net_profit = 0.0;
  double realized_variance = 0.0;  // of per-step P&L, n-1 denominator
  bool no_risk = false;            // realized variance is exactly zero
  SharpeStatus sharpe_status = SharpeStatus::kUndefined;
  double sharpe_annualized = 0.0;  // valid when sharpe_status == kValue
  double total_transaction_cost = 0.0;
  double total_liquidation_cost = 0.0;
  double total_short_cost = 0.0;
  double total_cash_interest = 0.0;
  bool feasible = false;
  std::vector<double> step_pnl;
};

// Per-step P&L over capital C * u, excess over rho_c, annualized by sqrt(252).
Metrics economic_metrics(const ProblemSpec& spec, const Assignment& bits);

// Unscaled quadratic risk sum over all steps.
double risk_term(const ProblemSpec& spec, const Assignment& bits);

struct ParetoRow {
  double q = 0.0;
  std::string solver;
  bool failed = false;
  std::string error;
  double objective = 0.0;
  std::optional<double> lower_bound;
  std::optional<double> gap_pct;
  double tts_s = 0.0;
  double profit = 0.0;     // net profit of the returned strategy
  double risk_term = 0.0;  // unscaled model risk
  Assignment best;
};

std::vector<ParetoRow> sweep_q(const ProblemSpec& spec,
                               const std::vector<double>& q_list,
                               const std::string& solver,
                               const SolveBudget& budget);

void write_pareto_csv(const std::vector<ParetoRow>& rows, std::ostream& out);

}  // namespace qubofolio

#endif  // QUBOFOLIO_EVALUATION_H_
