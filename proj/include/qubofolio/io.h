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

#ifndef QUBOFOLIO_IO_H_
#define QUBOFOLIO_IO_H_

#include <istream>
#include <ostream>
#include <string>

#include "qubofolio/evaluation.h"
#include "qubofolio/model.h"
#include "qubofolio/qubo.h"
#include "qubofolio/quantum.h"
#include "qubofolio/solvers.h"

namespace qubofolio {

// Shortest decimal that parses back to the same double.
std::string format_double(double value);

// Problem JSON. Either inline data
//   {n, T, k, B, C, q, delta, rho_c, rho_s, u, P, signed_risk,
//    prices: [[...]], covariances: [[[...]]]}
// or a price file
//   {..., price_csv: path, cov_window: W [, start, tickers, raw_prices]}
// with relative paths resolved against `base_dir`. P may be omitted for the
// default penalty. Malformed JSON throws kParse; invalid content throws kSpec
// with a field path.
ProblemSpec problem_from_json(const std::string& text,
                              const std::string& base_dir = ".");
ProblemSpec load_problem(const std::string& path);
// Always writes inline prices and covariances.
std::string problem_to_json(const ProblemSpec& spec);

// `p qubo <num_vars> <num_terms> <offset>` then `i j value` lines.
void write_qubo_text(const SparseQubo& qubo, std::ostream& out);
SparseQubo read_qubo_text(std::istream& in);
// Same layout with header `p ising`; h_i appears as `i i value`.
void write_ising_text(const IsingModel& ising, std::ostream& out);

std::string bqp_to_json(const BqpView& bqp);

// Run-length encoding of a bit vector: comma-separated `<bit>*<count>`
// runs, e.g. 0001100 -> "0*3,1*2,0*2".
std::string rle_encode(const Assignment& bits);
Assignment rle_decode(const std::string& text);

std::string report_to_json(const SolveReport& report);
SolveReport report_from_json(const std::string& text);

std::string quantum_run_to_json(const QuantumRun& run);

std::string metrics_to_json(const Metrics& metrics,
                            const ObjectiveBreakdown& breakdown,
                            double objective);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& contents);

}  // namespace qubofolio

#endif  // QUBOFOLIO_IO_H_
