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

#include "qubofolio/qubo.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <string>

#include "qubofolio/error.h"

namespace qubofolio {
namespace {

void check_bits(const BlockQubo& qubo, const Assignment& bits) {
  if (static_cast<std::int64_t>(bits.size()) != qubo.num_vars()) {
    fail(ErrorCode::kMismatch,
         "assignment has " + std::to_string(bits.size()) +
             " bits, QUBO has " + std::to_string(qubo.num_vars()) + " variables");
  }
}

// dE/dx_i with every other variable held at its current value.
long double field_of(const BlockQubo& q, const Assignment& bits,
                     std::int64_t i) {
  const int t = static_cast<int>(i / q.width);
  const std::int64_t p = i % q.width;
  const std::int64_t base = t * q.width;
  const double* row = q.blocks[t].data() + p * q.width;
  long double f = static_cast<long double>(q.linear[i]) + row[p];
  for (std::int64_t j = 0; j < q.width; ++j) {
    if (j != p && bits[base + j]) f += 2.0L * row[j];
  }
  if (t > 0 && bits[i - q.width]) f += q.cross[t - 1][p];
  if (t + 1 < q.num_steps && bits[i + q.width]) f += q.cross[t][p];
  return f;
}

// Adds P * (rhs - sum c_v z_v)^2 to one step's block.
void add_penalty_row(BlockQubo& q, const ConstraintRow& row, double weight) {
  q.offset += weight * row.rhs * row.rhs;
  for (std::size_t a = 0; a < row.index.size(); ++a) {
    const double ca = row.coefficient[a];
    q.linear[row.index[a]] += -2.0 * weight * row.rhs * ca;
    q.add_diagonal(row.index[a], weight * ca * ca);
    for (std::size_t b = a + 1; b < row.index.size(); ++b) {
      q.add_pair(row.index[a], row.index[b],
                 2.0 * weight * ca * row.coefficient[b]);
    }
  }
}

std::vector<ConstraintRow> constraint_rows(const ProblemSpec& spec) {
  const VariableLayout layout(spec);
  std::vector<ConstraintRow> rows;
  for (int t = 1; t <= spec.horizon; ++t) {
    const std::int64_t base = (t - 1) * layout.step_width();
    ConstraintRow assets{t, ConstraintKind::kAssetCount, {}, {},
                         static_cast<double>(spec.max_selected)};
    ConstraintRow cash{t, ConstraintKind::kCash, {}, {},
                       static_cast<double>(spec.capital_units)};
    for (std::int64_t pos = 0; pos < layout.x_width(); ++pos) {
      assets.index.push_back(base + pos);
      assets.coefficient.push_back(1.0);
      cash.index.push_back(base + pos);
      cash.coefficient.push_back(layout.direction_of(pos));
    }
    for (int b = 0; b < layout.asset_slack_bits(); ++b) {
      assets.index.push_back(base + layout.x_width() + b);
      assets.coefficient.push_back(std::ldexp(1.0, b));
    }
    for (int c = 0; c < layout.cash_slack_bits(); ++c) {
      cash.index.push_back(base + layout.x_width() + layout.asset_slack_bits() + c);
      cash.coefficient.push_back(std::ldexp(1.0, c));
    }
    rows.push_back(std::move(assets));
    rows.push_back(std::move(cash));
  }
  return rows;
}

}  // namespace

BlockQubo::BlockQubo(int steps, std::int64_t step_width)
    : num_steps(steps), width(step_width) {
  blocks.assign(steps, std::vector<double>(step_width * step_width, 0.0));
  cross.assign(steps > 0 ? steps - 1 : 0, std::vector<double>(step_width, 0.0));
  linear.assign(steps * step_width, 0.0);
}

void BlockQubo::add_pair(std::int64_t a, std::int64_t b, double value) {
  const int t = static_cast<int>(a / width);
  const std::int64_t i = a % width, j = b % width;
  blocks[t][i * width + j] += 0.5 * value;
  blocks[t][j * width + i] += 0.5 * value;
}

void BlockQubo::add_diagonal(std::int64_t a, double value) {
  const std::int64_t i = a % width;
  blocks[a / width][i * width + i] += value;
}

BlockQubo build_objective(const ProblemSpec& spec) {
  spec.validate();
  const VariableLayout layout(spec);
  const auto& fp = spec.params;
  const auto& prices = spec.prices.p;
  const int T = spec.horizon;
  const std::int64_t xw = layout.x_width();
  BlockQubo q(T, layout.step_width());

  std::vector<double> exposure_price(xw);
  std::vector<int> asset(xw);
  for (int t = 1; t <= T; ++t) {
    const std::int64_t base = (t - 1) * q.width;
    for (std::int64_t pos = 0; pos < xw; ++pos) {
      const int i = layout.asset_of(pos);
      const int tau = layout.direction_of(pos);
      const double price = prices(i, t - 1);
      const double next = prices(i, t);
      double& lin = q.linear[base + pos];
      lin += -tau * (next - price);          // profit
      lin += fp.transaction_rate * price;    // |x_{t-1} - x_t| at step t
      if (t < T) {
        lin += fp.transaction_rate * next;   // same variable seen from t+1
        q.cross[t - 1][pos] += -2.0 * fp.transaction_rate * next;
      } else {
        lin += fp.transaction_rate * price;  // liquidation
      }
      if (tau < 0) lin += fp.short_rate * price;
      asset[pos] = i;
      exposure_price[pos] = (spec.signed_risk ? tau : 1) * price;
    }
    if (fp.risk_aversion != 0.0) {
      const auto& sigma = spec.covariances.sigma[t - 1];
      double* block = q.blocks[t - 1].data();
      for (std::int64_t a = 0; a < xw; ++a) {
        const double wa = fp.risk_aversion * exposure_price[a];
        double* row = block + a * q.width;
        for (std::int64_t b = 0; b < xw; ++b) {
          row[b] += wa * exposure_price[b] * sigma(asset[a], asset[b]);
        }
      }
    }
    for (int c = 0; c < layout.cash_slack_bits(); ++c) {
      q.linear[base + xw + layout.asset_slack_bits() + c] +=
          -fp.cash_rate * fp.unit * std::ldexp(1.0, c);
    }
  }
  return q;
}

double default_penalty(const ProblemSpec& spec) {
  const BlockQubo q = build_objective(spec);
  double largest = 0.0;
  for (int t = 0; t < q.num_steps; ++t) {
    for (std::int64_t i = 0; i < q.width; ++i) {
      largest = std::max(largest, std::abs(q.linear[t * q.width + i] + q.at(t, i, i)));
      for (std::int64_t j = i + 1; j < q.width; ++j) {
        largest = std::max(largest, std::abs(2.0 * q.at(t, i, j)));
      }
    }
    if (t + 1 < q.num_steps) {
      for (double c : q.cross[t]) largest = std::max(largest, std::abs(c));
    }
  }
  if (largest == 0.0) return 1.0;
  return 10.0 * largest * (spec.max_selected + spec.capital_units);
}

double resolve_penalty(const ProblemSpec& spec) {
  return spec.params.penalty ? *spec.params.penalty : default_penalty(spec);
}

BlockQubo build_qubo(const ProblemSpec& spec) {
  BlockQubo q = build_objective(spec);
  const double weight = resolve_penalty(spec);
  for (const auto& row : constraint_rows(spec)) add_penalty_row(q, row, weight);
  return q;
}

BqpView build_bqp(const ProblemSpec& spec) {
  return BqpView{build_objective(spec), constraint_rows(spec)};
}

double energy(const BlockQubo& q, const Assignment& bits) {
  check_bits(q, bits);
  long double total = q.offset;
  std::vector<std::int64_t> on;
  on.reserve(q.width);
  for (int t = 0; t < q.num_steps; ++t) {
    const std::int64_t base = t * q.width;
    on.clear();
    for (std::int64_t i = 0; i < q.width; ++i) {
      if (bits[base + i]) on.push_back(i);
    }
    long double block = 0.0L;
    for (std::int64_t i : on) {
      block += q.linear[base + i];
      const double* row = q.blocks[t].data() + i * q.width;
      for (std::int64_t j : on) block += row[j];
      if (t + 1 < q.num_steps && bits[base + q.width + i]) block += q.cross[t][i];
    }
    total += block;
  }
  return static_cast<double>(total);
}

double bqp_objective(const BqpView& bqp, const Assignment& bits) {
  return energy(bqp.objective, bits);
}

std::vector<double> delta_energies(const BlockQubo& q, const Assignment& bits) {
  check_bits(q, bits);
  std::vector<double> out(bits.size());
  for (std::int64_t i = 0; i < q.num_vars(); ++i) {
    const long double f = field_of(q, bits, i);
    out[i] = static_cast<double>(bits[i] ? -f : f);
  }
  return out;
}

double row_scale(const BlockQubo& q, std::int64_t i) {
  const int t = static_cast<int>(i / q.width);
  const std::int64_t p = i % q.width;
  const double* row = q.blocks[t].data() + p * q.width;
  double scale = std::abs(q.linear[i]) + std::abs(row[p]);
  for (std::int64_t j = 0; j < q.width; ++j) {
    scale = std::max(scale, 2.0 * std::abs(row[j]));
  }
  if (t > 0) scale = std::max(scale, std::abs(q.cross[t - 1][p]));
  if (t + 1 < q.num_steps) scale = std::max(scale, std::abs(q.cross[t][p]));
  return scale;
}

FlipState::FlipState(const BlockQubo& qubo, Assignment bits) : qubo_(&qubo) {
  reset(std::move(bits));
}

void FlipState::reset(Assignment bits) {
  check_bits(*qubo_, bits);
  bits_ = std::move(bits);
  field_.resize(bits_.size());
  for (std::int64_t i = 0; i < size(); ++i) field_[i] = field_of(*qubo_, bits_, i);
  energy_ = qubofolio::energy(*qubo_, bits_);
}

std::vector<double> FlipState::deltas() const {
  std::vector<double> out(bits_.size());
  for (std::int64_t i = 0; i < size(); ++i) out[i] = delta(i);
  return out;
}

void FlipState::flip(std::int64_t i) {
  if (i < 0 || i >= size()) fail(ErrorCode::kSpec, "flip index out of range");
  const BlockQubo& q = *qubo_;
  const long double change = bits_[i] ? -1.0L : 1.0L;
  energy_ += change * field_[i];
  bits_[i] ^= 1;
  const int t = static_cast<int>(i / q.width);
  const std::int64_t p = i % q.width;
  const std::int64_t base = t * q.width;
  const double* row = q.blocks[t].data() + p * q.width;
  long double* field = field_.data() + base;
  for (std::int64_t j = 0; j < q.width; ++j) {
    if (j != p) field[j] += 2.0L * change * row[j];
  }
  if (t > 0) field_[i - q.width] += change * q.cross[t - 1][p];
  if (t + 1 < q.num_steps) field_[i + q.width] += change * q.cross[t][p];
}

SparseQubo to_sparse(const BlockQubo& q) {
  SparseQubo out;
  out.num_vars = q.num_vars();
  out.offset = q.offset;
  for (int t = 0; t < q.num_steps; ++t) {
    const std::int64_t base = t * q.width;
    for (std::int64_t i = 0; i < q.width; ++i) {
      const double diag = q.linear[base + i] + q.at(t, i, i);
      if (diag != 0.0) out.terms.push_back({base + i, base + i, diag});
      for (std::int64_t j = i + 1; j < q.width; ++j) {
        const double v = 2.0 * q.at(t, i, j);
        if (v != 0.0) out.terms.push_back({base + i, base + j, v});
      }
      if (t + 1 < q.num_steps && q.cross[t][i] != 0.0) {
        out.terms.push_back({base + i, base + q.width + i, q.cross[t][i]});
      }
    }
  }
  return out;
}

BlockQubo from_sparse(const SparseQubo& s) {
  const std::int64_t n = s.num_vars;
  std::int64_t width = n;
  for (std::int64_t w = 1; w < n; ++w) {
    if (n % w != 0) continue;
    const bool fits = std::all_of(s.terms.begin(), s.terms.end(), [&](const SparseTerm& t) {
      return t.i / w == t.j / w || (t.j - t.i == w && t.j / w == t.i / w + 1);
    });
    if (fits) {
      width = w;
      break;
    }
  }
  BlockQubo q(n == 0 ? 0 : static_cast<int>(n / width), n == 0 ? 0 : width);
  q.offset = s.offset;
  for (const auto& term : s.terms) {
    if (term.i < 0 || term.j < term.i || term.j >= n) {
      fail(ErrorCode::kParse, "QUBO term index out of range");
    }
    if (term.i == term.j) {
      q.linear[term.i] += term.value;
    } else if (term.i / width == term.j / width) {
      q.add_pair(term.i, term.j, term.value);
    } else {
      q.cross[term.i / width][term.i % width] += term.value;
    }
  }
  return q;
}

double sparse_energy(const SparseQubo& s, const Assignment& bits) {
  long double total = s.offset;
  for (const auto& term : s.terms) {
    if (bits[term.i] && bits[term.j]) total += term.value;
  }
  return static_cast<double>(total);
}

IsingModel to_ising(const SparseQubo& qubo) {
  // x = (1 + s) / 2:  c x_i -> c/2 (1 + s_i);  c x_i x_j -> c/4 (1 + s_i + s_j + s_i s_j)
  IsingModel out;
  out.num_spins = qubo.num_vars;
  std::vector<long double> h(qubo.num_vars, 0.0L);
  long double offset = qubo.offset;
  for (const auto& term : qubo.terms) {
    const long double c = term.value;
    if (term.i == term.j) {
      h[term.i] += c / 2;
      offset += c / 2;
    } else {
      h[term.i] += c / 4;
      h[term.j] += c / 4;
      offset += c / 4;
      out.couplings.push_back({term.i, term.j, static_cast<double>(c / 4)});
    }
  }
  out.h.assign(h.begin(), h.end());
  out.offset = static_cast<double>(offset);
  return out;
}

IsingModel to_ising(const BlockQubo& qubo) { return to_ising(to_sparse(qubo)); }

double ising_energy(const IsingModel& ising, const std::vector<int>& spins) {
  long double total = ising.offset;
  for (std::int64_t i = 0; i < ising.num_spins; ++i) total += ising.h[i] * spins[i];
  for (const auto& c : ising.couplings) {
    total += c.value * spins[c.i] * spins[c.j];
  }
  return static_cast<double>(total);
}

ObjectiveBreakdown objective_breakdown(const ProblemSpec& spec,
                                       const Assignment& bits) {
  const Trajectory traj = decode_assignment(spec, bits);
  ObjectiveBreakdown out;
  long double risk = 0, profit = 0, txn = 0, liq = 0, cash = 0, shorts = 0;
  for (const auto& st : traj.steps) {
    risk += st.risk;
    profit += st.gross_profit;
    txn += st.transaction_cost;
    liq += st.liquidation_cost;
    cash += st.cash_interest;
    shorts += st.short_cost;
  }
  out.risk = static_cast<double>(spec.params.risk_aversion * risk);
  out.profit = static_cast<double>(-profit);
  out.transaction = static_cast<double>(txn);
  out.liquidation = static_cast<double>(liq);
  out.cash_interest = static_cast<double>(-cash);
  out.short_cost = static_cast<double>(shorts);
  long double squares = 0.0L;
  for (const auto& r : constraint_residuals(spec, bits)) {
    squares += static_cast<long double>(r.asset) * r.asset +
               static_cast<long double>(r.cash) * r.cash;
  }
  out.penalty = squares == 0.0L
                    ? 0.0
                    : static_cast<double>(resolve_penalty(spec) * squares);
  return out;
}

}  // namespace qubofolio
