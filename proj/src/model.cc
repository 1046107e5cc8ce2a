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

#include "qubofolio/model.h"

#include <cmath>
#include <string>

#include "qubofolio/error.h"

namespace qubofolio {
namespace {

void check_length(const ProblemSpec& spec, const Assignment& bits) {
  const VariableLayout layout(spec);
  if (static_cast<std::int64_t>(bits.size()) != layout.total()) {
    fail(ErrorCode::kMismatch,
         "assignment has " + std::to_string(bits.size()) +
             " bits, layout expects " + std::to_string(layout.total()));
  }
}

void require(bool ok, const std::string& field, const std::string& why) {
  if (!ok) fail(ErrorCode::kSpec, field + ": " + why);
}

}  // namespace

int slack_bits(int value) {
  int bits = 0;
  while ((value >> bits) > 0) ++bits;
  return bits;
}

VariableLayout::VariableLayout(int n, int T, int k, int B, int C)
    : n_(n), T_(T), k_(k), nb_(0), nc_(0) {
  if (n < 1 || T < 1 || k < 1 || B < 1 || C < 1) {
    fail(ErrorCode::kSpec, "layout dimensions must all be >= 1");
  }
  if (C > B) fail(ErrorCode::kSpec, "C must not exceed B");
  nb_ = slack_bits(B);
  nc_ = slack_bits(C);
}

std::int64_t VariableLayout::encode(const VarRole& role) const {
  if (role.step < 1 || role.step > T_) fail(ErrorCode::kSpec, "step out of range");
  std::int64_t pos = 0;
  const std::int64_t kn = static_cast<std::int64_t>(k_) * n_;
  switch (role.kind) {
    case VarKind::kLong:
    case VarKind::kShort:
      if (role.asset < 0 || role.asset >= n_ || role.index < 0 ||
          role.index >= k_) {
        fail(ErrorCode::kSpec, "asset or block out of range");
      }
      pos = static_cast<std::int64_t>(role.asset) * k_ + role.index +
            (role.kind == VarKind::kShort ? kn : 0);
      break;
    case VarKind::kAssetSlack:
      if (role.index < 0 || role.index >= nb_) {
        fail(ErrorCode::kSpec, "asset slack bit out of range");
      }
      pos = 2 * kn + role.index;
      break;
    case VarKind::kCashSlack:
      if (role.index < 0 || role.index >= nc_) {
        fail(ErrorCode::kSpec, "cash slack bit out of range");
      }
      pos = 2 * kn + nb_ + role.index;
      break;
  }
  return (role.step - 1) * step_width() + pos;
}

VarRole VariableLayout::decode(std::int64_t index) const {
  if (index < 0 || index >= total()) fail(ErrorCode::kSpec, "index out of range");
  const std::int64_t kn = static_cast<std::int64_t>(k_) * n_;
  VarRole role;
  role.step = static_cast<int>(index / step_width()) + 1;
  const std::int64_t pos = index % step_width();
  if (pos < 2 * kn) {
    role.kind = pos < kn ? VarKind::kLong : VarKind::kShort;
    role.asset = static_cast<int>((pos % kn) / k_);
    role.index = static_cast<int>(pos % k_);
  } else if (pos < 2 * kn + nb_) {
    role.kind = VarKind::kAssetSlack;
    role.index = static_cast<int>(pos - 2 * kn);
  } else {
    role.kind = VarKind::kCashSlack;
    role.index = static_cast<int>(pos - 2 * kn - nb_);
  }
  return role;
}

void ProblemSpec::validate() const {
  require(num_assets >= 1, "n", "must be >= 1");
  require(horizon >= 1, "T", "must be >= 1");
  require(max_blocks >= 1, "k", "must be >= 1");
  require(max_selected >= 1, "B", "must be >= 1");
  require(capital_units >= 1, "C", "must be >= 1");
  require(capital_units <= max_selected, "C", "must not exceed B");
  require(params.risk_aversion >= 0.0, "q", "must be >= 0");
  require(params.transaction_rate >= 0.0, "delta", "must be >= 0");
  require(params.cash_rate >= 0.0, "rho_c", "must be >= 0");
  require(params.short_rate >= 0.0, "rho_s", "must be >= 0");
  require(params.unit > 0.0, "u", "must be > 0");
  require(!params.penalty || *params.penalty > 0.0, "P", "must be > 0");
  require(prices.p.rows() == num_assets, "prices",
          "expected " + std::to_string(num_assets) + " rows");
  require(prices.p.cols() == horizon + 1, "prices",
          "expected T+1 = " + std::to_string(horizon + 1) + " columns");
  require(covariances.horizon() == horizon, "covariances",
          "expected T = " + std::to_string(horizon) + " matrices");
  for (int t = 0; t < covariances.horizon(); ++t) {
    const auto& s = covariances.sigma[t];
    const std::string field = "covariances[" + std::to_string(t) + "]";
    require(s.rows() == num_assets && s.cols() == num_assets, field,
            "expected n x n");
    require((s - s.transpose()).cwiseAbs().maxCoeff() <= 1e-12 *
                std::max(1.0, s.cwiseAbs().maxCoeff()),
            field, "not symmetric");
  }
  require(prices.p.allFinite() && (prices.p.array() > 0.0).all(), "prices",
          "must be finite and > 0");
}

Trajectory decode_assignment(const ProblemSpec& spec, const Assignment& bits) {
  check_length(spec, bits);
  const VariableLayout layout(spec);
  const int n = spec.num_assets, k = spec.max_blocks;
  const auto& fp = spec.params;
  const std::int64_t kn = static_cast<std::int64_t>(n) * k;

  Trajectory traj;
  traj.steps.resize(spec.horizon);
  for (int t = 1; t <= spec.horizon; ++t) {
    StepState& st = traj.steps[t - 1];
    const std::int64_t base = (t - 1) * layout.step_width();
    st.long_blocks.assign(n, std::vector<std::uint8_t>(k, 0));
    st.short_blocks.assign(n, std::vector<std::uint8_t>(k, 0));
    st.net_position.assign(n, 0);
    std::vector<double> exposure(n, 0.0);
    for (std::int64_t pos = 0; pos < 2 * kn; ++pos) {
      const int x = bits[base + pos];
      const int i = layout.asset_of(pos);
      const int tau = layout.direction_of(pos);
      const double price = spec.prices.p(i, t - 1);
      const double next = spec.prices.p(i, t);
      if (tau > 0) {
        st.long_blocks[i][pos % k] = x;
      } else {
        st.short_blocks[i][pos % k] = x;
      }
      const int prev = t > 1 ? bits[base - layout.step_width() + pos] : 0;
      st.transaction_cost += fp.transaction_rate * price * std::abs(prev - x);
      if (!x) continue;
      st.net_position[i] += tau;
      st.blocks_selected += 1;
      exposure[i] += spec.signed_risk ? tau : 1;
      st.gross_profit += tau * (next - price);
      if (tau < 0) st.short_cost += fp.short_rate * price;
      if (t == spec.horizon) st.liquidation_cost += fp.transaction_rate * price;
    }
    for (int b = 0; b < layout.asset_slack_bits(); ++b) {
      st.asset_slack += bits[base + 2 * kn + b] << b;
    }
    for (int c = 0; c < layout.cash_slack_bits(); ++c) {
      st.cash_units +=
          bits[base + 2 * kn + layout.asset_slack_bits() + c] << c;
    }
    st.cash_interest = fp.cash_rate * fp.unit * st.cash_units;
    const auto& sigma = spec.covariances.sigma[t - 1];
    for (int i = 0; i < n; ++i) {
      if (exposure[i] == 0.0) continue;
      for (int j = 0; j < n; ++j) {
        if (exposure[j] == 0.0) continue;
        st.risk += exposure[i] * spec.prices.p(i, t - 1) * sigma(i, j) *
                   spec.prices.p(j, t - 1) * exposure[j];
      }
    }
  }
  return traj;
}

std::vector<Residual> constraint_residuals(const ProblemSpec& spec,
                                           const Assignment& bits) {
  check_length(spec, bits);
  const VariableLayout layout(spec);
  std::vector<Residual> out(spec.horizon);
  for (int t = 1; t <= spec.horizon; ++t) {
    const std::int64_t base = (t - 1) * layout.step_width();
    std::int64_t selected = 0, signed_sum = 0, s_value = 0, y_value = 0;
    for (std::int64_t pos = 0; pos < layout.x_width(); ++pos) {
      if (!bits[base + pos]) continue;
      selected += 1;
      signed_sum += layout.direction_of(pos);
    }
    for (int b = 0; b < layout.asset_slack_bits(); ++b) {
      s_value += static_cast<std::int64_t>(bits[base + layout.x_width() + b]) << b;
    }
    for (int c = 0; c < layout.cash_slack_bits(); ++c) {
      y_value += static_cast<std::int64_t>(
                     bits[base + layout.x_width() + layout.asset_slack_bits() + c])
                 << c;
    }
    out[t - 1].asset = spec.max_selected - selected - s_value;
    out[t - 1].cash = spec.capital_units - signed_sum - y_value;
  }
  return out;
}

bool is_feasible(const ProblemSpec& spec, const Assignment& bits) {
  for (const auto& r : constraint_residuals(spec, bits)) {
    if (r.asset != 0 || r.cash != 0) return false;
  }
  return true;
}

Assignment cash_only_assignment(const ProblemSpec& spec) {
  const VariableLayout layout(spec);
  Assignment bits(layout.total(), 0);
  for (int t = 1; t <= spec.horizon; ++t) {
    for (int b = 0; b < layout.asset_slack_bits(); ++b) {
      bits[layout.encode({t, VarKind::kAssetSlack, 0, b})] =
          (spec.max_selected >> b) & 1;
    }
    for (int c = 0; c < layout.cash_slack_bits(); ++c) {
      bits[layout.encode({t, VarKind::kCashSlack, 0, c})] =
          (spec.capital_units >> c) & 1;
    }
  }
  return bits;
}

}  // namespace qubofolio
