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

#ifndef QUBOFOLIO_INSTANCES_H_
#define QUBOFOLIO_INSTANCES_H_

#include <cstdint>

#include "qubofolio/model.h"

namespace qubofolio {

// Market frictions used by the benchmark experiments: delta = 0.1%,
// rho_c = 0.01% daily, rho_s = 0.0025% daily, u = $100,000.
FrictionParams benchmark_params(double q = 0.0);

// Synthetic prices run through block normalization and a trailing
// covariance window, with benchmark frictions.
ProblemSpec synthetic_problem(int n, int T, int k, int B, int C,
                              std::uint64_t seed, double q = 0.0,
                              int window = 60);

// Small instance whose QUBO fits the statevector simulator: k = 1,
// B = n, C = max(1, n - 1). n <= 3 and T <= 2 give at most 20 variables.
ProblemSpec toy_problem(int n, int T, std::uint64_t seed, double q = 0.0);

}  // namespace qubofolio

#endif  // QUBOFOLIO_INSTANCES_H_
