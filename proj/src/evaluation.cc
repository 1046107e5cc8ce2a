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

#include "qubofolio/evaluation.h"

#include <algorithm>
#include <cmath>

#include "qubofolio/error.h"
#include "qubofolio/io.h"
#include "qubofolio/qubo.h"

namespace qubofolio {

double gap(double objective, double lower_bound) {
  if (objective == 0.0) fail(ErrorCode::kSpec, "gap is undefined for a zero objective");
  return 100.0 * std::abs(objective - lower_bound) / std::abs(objective);
}

double tts(const SolveReport& report) {
  if (report.trace.empty()) fail(ErrorCode::kSpec, "TTS needs a non-empty trace");
  const double tol = 1e-12 * std::max(1.0, std::abs(report.best_energy));
  for (const auto& [time, e] : report.trace) {
    if (e <= report.best_energy + tol) return time;
  }
  return report.trace.back().first;
}

double risk_term(const ProblemSpec& spec, const Assignment& bits) {
  double total = 0.0;
  for (const auto& st : decode_assignment(spec, bits).steps) total += st.risk;
  return total;
}

Metrics economic_metrics(const ProblemSpec& spec, const Assignment& bits) {
  const Trajectory traj = decode_assignment(spec, bits);
  Metrics m;
  m.feasible = is_feasible(spec, bits);
  for (const auto& st : traj.steps) {
    const double pnl = st.gross_profit - st.transaction_cost - st.short_cost +
                       st.cash_interest - st.liquidation_cost;
    m.step_pnl.push_back(pnl);
    m.gross_profit += st.gross_profit;
    m.total_transaction_cost += st.transaction_cost;
    m.total_liquidation_cost += st.liquidation_cost;
    m.total_short_cost += st.short_cost;
    m.total_cash_interest += st.cash_interest;
  }
  m.net_profit = m.gross_profit - m.total_transaction_cost - m.total_short_cost +
                 m.total_cash_interest - m.total_liquidation_cost;

  const auto T = static_cast<double>(m.step_pnl.size());
  if (m.step_pnl.size() < 2) {
    m.sharpe_status = SharpeStatus::kUndefined;
    return m;
  }
  const auto [lo, hi] = std::minmax_element(m.step_pnl.begin(), m.step_pnl.end());
  if (*lo == *hi) {
    m.no_risk = true;
    m.realized_variance = 0.0;
    m.sharpe_status = SharpeStatus::kNoRisk;
    return m;
  }
  const double capital = spec.capital_units * spec.params.unit;
  double mean_pnl = 0.0, mean_r = 0.0;
  for (double p : m.step_pnl) {
    mean_pnl += p / T;
    mean_r += (p / capital) / T;
  }
  double var_pnl = 0.0, var_r = 0.0;
  for (double p : m.step_pnl) {
    var_pnl += (p - mean_pnl) * (p - mean_pnl) / (T - 1);
    const double r = p / capital;
    var_r += (r - mean_r) * (r - mean_r) / (T - 1);
  }
  m.realized_variance = var_pnl;
  m.sharpe_status = SharpeStatus::kValue;
  m.sharpe_annualized =
      (mean_r - spec.params.cash_rate) / std::sqrt(var_r) * std::sqrt(252.0);
  return m;
}

std::vector<ParetoRow> sweep_q(const ProblemSpec& spec,
                               const std::vector<double>& q_list,
                               const std::string& solver,
                               const SolveBudget& budget) {
  if (q_list.empty()) fail(ErrorCode::kSpec, "q list must not be empty");
  std::vector<ParetoRow> rows;
  for (double q : q_list) {
    ParetoRow row;
    row.q = q;
    row.solver = solver;
    try {
      ProblemSpec instance = spec;
      instance.params.risk_aversion = q;
      const BlockQubo qubo = build_qubo(instance);
      const SolveReport report = solve(solver, qubo, budget);
      row.objective = report.best_energy;
      row.lower_bound = report.lower_bound;
      if (report.lower_bound && report.best_energy != 0.0) {
        row.gap_pct = gap(report.best_energy, *report.lower_bound);
      }
      row.tts_s = report.trace.empty() ? 0.0 : tts(report);
      row.profit = economic_metrics(instance, report.best).net_profit;
      row.risk_term = risk_term(instance, report.best);
      row.best = report.best;
    } catch (const std::exception& e) {
      row.failed = true;
      row.error = e.what();
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

void write_pareto_csv(const std::vector<ParetoRow>& rows, std::ostream& out) {
  out << "q,solver,objective,lower_bound,gap_pct,tts_s,profit,risk_term\n";
  for (const auto& r : rows) {
    out << format_double(r.q) << ',' << r.solver << ',';
    if (r.failed) {
      out << "failed,,,,,\n";
      continue;
    }
    out << format_double(r.objective) << ','
        << (r.lower_bound ? format_double(*r.lower_bound) : "") << ','
        << (r.gap_pct ? format_double(*r.gap_pct) : "") << ','
        << format_double(r.tts_s) << ',' << format_double(r.profit) << ','
        << format_double(r.risk_term) << '\n';
  }
}

}  // namespace qubofolio
