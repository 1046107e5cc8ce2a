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

#ifndef QUBOFOLIO_MARKET_DATA_H_
#define QUBOFOLIO_MARKET_DATA_H_

#include <cstdint>
#include <istream>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace qubofolio {

// Aligned close prices. Rows are assets, columns are trading dates in
// strictly increasing ISO-8601 order; every cell is strictly positive.
struct PriceTable {
  std::vector<std::string> tickers;
  std::vector<std::string> dates;
  Eigen::MatrixXd close;  // [asset x date]

  int num_assets() const { return static_cast<int>(tickers.size()); }
  int num_dates() const { return static_cast<int>(dates.size()); }
  // Column of `date`, or -1.
  int date_index(const std::string& date) const;
};

// Block values p[i][t] in currency for t = 1..T+1 (stored 0-based), where one
// block of asset i is worth `unit` currency at the first column.
struct BlockPrices {
  Eigen::MatrixXd p;  // [asset x (T+1)]
  double unit = 0.0;

  int num_assets() const { return static_cast<int>(p.rows()); }
  int horizon() const { return static_cast<int>(p.cols()) - 1; }
};

// One covariance matrix of simple daily returns per period t = 1..T.
struct CovarianceSeries {
  std::vector<Eigen::MatrixXd> sigma;
  // Total negative eigenvalue mass removed by PSD repair, per period.
  std::vector<double> clipped_mass;

  int horizon() const { return static_cast<int>(sigma.size()); }
};

struct LoadOptions {
  std::vector<std::string> tickers;  // empty: every ticker in the file
  std::optional<std::string> first_date;
  std::optional<std::string> last_date;
  double max_missing_fraction = 0.10;
};

// Reads a `date,ticker,close` CSV. Tickers missing more than
// `max_missing_fraction` of the dates in range are dropped with a warning;
// the remaining dates are intersected so the table has no gaps.
PriceTable load_prices(const std::string& path, const LoadOptions& options = {},
                       std::vector<std::string>* warnings = nullptr);
PriceTable parse_prices(std::istream& in, const LoadOptions& options = {},
                        std::vector<std::string>* warnings = nullptr);

// p[i][t] = unit * close[i][start + t] / close[i][start], t = 0..horizon.
BlockPrices normalize_blocks(const PriceTable& table, double unit,
                             const std::string& start, int horizon);

// Raw closes over the same window, no normalization.
BlockPrices raw_blocks(const PriceTable& table, const std::string& start,
                       int horizon);

// sigma[t] is the sample covariance (n-1 denominator) of the `window` daily
// simple returns ending on the date of period t, symmetrized and repaired.
CovarianceSeries estimate_covariance(const PriceTable& table, int window,
                                     const std::string& start, int horizon);

// Clips negative eigenvalues at zero when the smallest one is below
// -tolerance. Returns the sum of the clipped (negative) eigenvalues.
double repair_psd(Eigen::MatrixXd& matrix, double tolerance = 1e-9);

// Correlated geometric random walk used for synthetic instances and tests.
// Prices start near 100 and follow a one-factor model with daily volatility
// around 1.5%.
PriceTable synthetic_prices(int num_assets, int num_days, std::uint64_t seed);

void write_prices_csv(const PriceTable& table, std::ostream& out);

// Earliest start date with `window` days of return history before it.
std::string default_start(const PriceTable& table, int window);

}  // namespace qubofolio

#endif  // QUBOFOLIO_MARKET_DATA_H_
