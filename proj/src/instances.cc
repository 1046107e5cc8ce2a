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

#include "qubofolio/instances.h"

#include "qubofolio/error.h"
#include "qubofolio/market_data.h"

namespace qubofolio {

FrictionParams benchmark_params(double q) {
  FrictionParams p;
  p.risk_aversion = q;
  p.transaction_rate = 0.001;
  p.cash_rate = 0.0001;
  p.short_rate = 0.000025;
  p.unit = 100000.0;
  return p;
}

ProblemSpec synthetic_problem(int n, int T, int k, int B, int C,
                              std::uint64_t seed, double q, int window) {
  const PriceTable table = synthetic_prices(n, window + T + 1, seed);
  const std::string start = default_start(table, window);
  ProblemSpec spec;
  spec.num_assets = n;
  spec.horizon = T;
  spec.max_blocks = k;
  spec.max_selected = B;
  spec.capital_units = C;
  spec.params = benchmark_params(q);
  spec.prices = normalize_blocks(table, spec.params.unit, start, T);
  spec.covariances = estimate_covariance(table, window, start, T);
  spec.validate();
  return spec;
}

ProblemSpec toy_problem(int n, int T, std::uint64_t seed, double q) {
  if (n < 1 || n > 3 || T < 1 || T > 2) {
    fail(ErrorCode::kSpec, "toy instances need 1 <= n <= 3 and 1 <= T <= 2");
  }
  return synthetic_problem(n, T, 1, n, n > 1 ? n - 1 : 1, seed, q, 20);
}

}  // namespace qubofolio
