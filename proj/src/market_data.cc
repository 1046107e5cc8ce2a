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

#include "qubofolio/market_data.h"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string_view>

#include "qubofolio/error.h"

namespace qubofolio {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() &&
         (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

bool valid_iso_date(std::string_view s) {
  if (s.size() != 10 || s[4] != '-' || s[7] != '-') return false;
  for (int i : {0, 1, 2, 3, 5, 6, 8, 9}) {
    if (s[i] < '0' || s[i] > '9') return false;
  }
  const int y = std::stoi(std::string(s.substr(0, 4)));
  const unsigned m = std::stoi(std::string(s.substr(5, 2)));
  const unsigned d = std::stoi(std::string(s.substr(8, 2)));
  return std::chrono::year_month_day(std::chrono::year(y), std::chrono::month(m),
                                     std::chrono::day(d))
      .ok();
}

int require_date(const PriceTable& table, const std::string& date) {
  const int idx = table.date_index(date);
  if (idx < 0) fail(ErrorCode::kSpec, "start date " + date + " not in price table");
  return idx;
}

}  // namespace

int PriceTable::date_index(const std::string& date) const {
  auto it = std::lower_bound(dates.begin(), dates.end(), date);
  if (it == dates.end() || *it != date) return -1;
  return static_cast<int>(it - dates.begin());
}

PriceTable parse_prices(std::istream& in, const LoadOptions& options,
                        std::vector<std::string>* warnings) {
  std::map<std::string, std::map<std::string, double>> by_ticker;
  std::set<std::string> all_dates;
  const std::set<std::string> wanted(options.tickers.begin(),
                                     options.tickers.end());

  std::string line;
  int line_no = 0;
  bool header_seen = false;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view row = trim(line);
    if (row.empty()) continue;
    if (!header_seen) {
      header_seen = true;
      if (row.substr(0, 4) == "date") continue;
    }
    const auto c1 = row.find(',');
    const auto c2 = c1 == std::string_view::npos ? c1 : row.find(',', c1 + 1);
    if (c2 == std::string_view::npos) {
      fail(ErrorCode::kParse, "price CSV line " + std::to_string(line_no) +
                                  ": expected date,ticker,close");
    }
    const std::string date(trim(row.substr(0, c1)));
    const std::string ticker(trim(row.substr(c1 + 1, c2 - c1 - 1)));
    const std::string_view value = trim(row.substr(c2 + 1));
    double close = 0.0;
    auto [ptr, ec] =
        std::from_chars(value.data(), value.data() + value.size(), close);
    if (!valid_iso_date(date) || ticker.empty() || ec != std::errc() ||
        ptr != value.data() + value.size() || !(close > 0.0) ||
        !std::isfinite(close)) {
      fail(ErrorCode::kParse,
           "price CSV line " + std::to_string(line_no) + ": unparseable row");
    }
    if (options.first_date && date < *options.first_date) continue;
    if (options.last_date && date > *options.last_date) continue;
    if (!wanted.empty() && !wanted.count(ticker)) continue;
    by_ticker[ticker][date] = close;
    all_dates.insert(date);
  }

  for (const auto& t : options.tickers) {
    if (!by_ticker.count(t)) fail(ErrorCode::kSpec, "ticker " + t + " not found");
  }

  const double total = static_cast<double>(all_dates.size());
  std::set<std::string> common = all_dates;
  std::vector<std::string> kept;
  for (const auto& [ticker, series] : by_ticker) {
    const double missing = total - static_cast<double>(series.size());
    if (missing > options.max_missing_fraction * total) {
      if (warnings) {
        warnings->push_back("dropping " + ticker + ": missing " +
                            std::to_string(static_cast<int>(missing)) + " of " +
                            std::to_string(static_cast<int>(total)) + " dates");
      }
      continue;
    }
    kept.push_back(ticker);
  }
  for (const auto& ticker : kept) {
    const auto& series = by_ticker[ticker];
    for (auto it = common.begin(); it != common.end();) {
      it = series.count(*it) ? std::next(it) : common.erase(it);
    }
  }
  if (warnings && common.size() < all_dates.size() && !kept.empty()) {
    warnings->push_back("dropped " +
                        std::to_string(all_dates.size() - common.size()) +
                        " dates not covered by every ticker");
  }

  PriceTable table;
  table.tickers = kept;
  table.dates.assign(common.begin(), common.end());
  table.close.resize(table.num_assets(), table.num_dates());
  for (int i = 0; i < table.num_assets(); ++i) {
    const auto& series = by_ticker[table.tickers[i]];
    for (int d = 0; d < table.num_dates(); ++d) {
      table.close(i, d) = series.at(table.dates[d]);
    }
  }
  return table;
}

PriceTable load_prices(const std::string& path, const LoadOptions& options,
                       std::vector<std::string>* warnings) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::kIo, "cannot open price file " + path);
  return parse_prices(in, options, warnings);
}

BlockPrices raw_blocks(const PriceTable& table, const std::string& start,
                       int horizon) {
  const int s = require_date(table, start);
  if (horizon < 1 || s + horizon >= table.num_dates()) {
    fail(ErrorCode::kSpec, "price table has fewer than T+1 dates from " + start);
  }
  BlockPrices out;
  out.p = table.close.middleCols(s, horizon + 1);
  out.unit = 1.0;
  return out;
}

BlockPrices normalize_blocks(const PriceTable& table, double unit,
                             const std::string& start, int horizon) {
  if (!(unit > 0.0)) fail(ErrorCode::kSpec, "unit value must be positive");
  BlockPrices out = raw_blocks(table, start, horizon);
  for (int i = 0; i < out.p.rows(); ++i) {
    const double base = out.p(i, 0);
    for (int t = 0; t <= horizon; ++t) out.p(i, t) = unit * (out.p(i, t) / base);
    out.p(i, 0) = unit;
  }
  out.unit = unit;
  return out;
}

double repair_psd(Eigen::MatrixXd& matrix, double tolerance) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(matrix);
  const Eigen::VectorXd& values = solver.eigenvalues();
  if (values.size() == 0 || values.minCoeff() >= -tolerance) return 0.0;
  double clipped = 0.0;
  Eigen::VectorXd kept = values;
  for (int i = 0; i < kept.size(); ++i) {
    if (kept(i) < 0.0) {
      clipped += kept(i);
      kept(i) = 0.0;
    }
  }
  const Eigen::MatrixXd& v = solver.eigenvectors();
  matrix = v * kept.asDiagonal() * v.transpose();
  matrix = 0.5 * (matrix + matrix.transpose()).eval();
  return clipped;
}

CovarianceSeries estimate_covariance(const PriceTable& table, int window,
                                     const std::string& start, int horizon) {
  if (window < 2) fail(ErrorCode::kSpec, "covariance window must be >= 2");
  const int s = require_date(table, start);
  if (s < window || s + horizon - 1 >= table.num_dates()) {
    fail(ErrorCode::kSpec, "insufficient price history for window " +
                               std::to_string(window) + " and horizon " +
                               std::to_string(horizon));
  }
  const int n = table.num_assets();
  CovarianceSeries out;
  for (int t = 0; t < horizon; ++t) {
    const int end = s + t;  // date of period t+1
    Eigen::MatrixXd returns(window, n);
    for (int w = 0; w < window; ++w) {
      const int d = end - window + 1 + w;
      for (int i = 0; i < n; ++i) {
        returns(w, i) = table.close(i, d) / table.close(i, d - 1) - 1.0;
      }
    }
    const Eigen::RowVectorXd mean = returns.colwise().mean();
    returns.rowwise() -= mean;
    Eigen::MatrixXd cov =
        (returns.transpose() * returns) / static_cast<double>(window - 1);
    cov = 0.5 * (cov + cov.transpose()).eval();
    out.clipped_mass.push_back(repair_psd(cov));
    out.sigma.push_back(std::move(cov));
  }
  return out;
}

std::string default_start(const PriceTable& table, int window) {
  if (window < 0 || window >= table.num_dates()) {
    fail(ErrorCode::kSpec, "price table too short for covariance window");
  }
  return table.dates[window];
}

PriceTable synthetic_prices(int num_assets, int num_days, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  std::uniform_real_distribution<double> uniform(0.0, 1.0);

  PriceTable table;
  for (int i = 0; i < num_assets; ++i) {
    char name[16];
    std::snprintf(name, sizeof(name), "S%04d", i);
    table.tickers.emplace_back(name);
  }
  // Business-day-free calendar starting 2023-01-02; only ordering matters.
  using namespace std::chrono;
  sys_days day = sys_days(year(2023) / January / 2);
  for (int d = 0; d < num_days; ++d, day += days(1)) {
    const year_month_day ymd(day);
    char buf[16];
    std::snprintf(buf, sizeof(buf), "%04d-%02u-%02u", int(ymd.year()),
                  unsigned(ymd.month()), unsigned(ymd.day()));
    table.dates.emplace_back(buf);
  }

  std::vector<double> beta(num_assets), vol(num_assets), drift(num_assets);
  for (int i = 0; i < num_assets; ++i) {
    beta[i] = 0.5 + uniform(rng);
    vol[i] = 0.008 + 0.012 * uniform(rng);
    drift[i] = 0.002 * (uniform(rng) - 0.5);
  }
  table.close.resize(num_assets, num_days);
  for (int i = 0; i < num_assets; ++i) table.close(i, 0) = 50.0 + 100.0 * uniform(rng);
  for (int d = 1; d < num_days; ++d) {
    const double market = 0.008 * normal(rng);
    for (int i = 0; i < num_assets; ++i) {
      const double r = drift[i] + beta[i] * market + vol[i] * normal(rng);
      table.close(i, d) = table.close(i, d - 1) * std::exp(r);
    }
  }
  return table;
}

void write_prices_csv(const PriceTable& table, std::ostream& out) {
  out << "date,ticker,close\n";
  char buf[64];
  for (int d = 0; d < table.num_dates(); ++d) {
    for (int i = 0; i < table.num_assets(); ++i) {
      auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), table.close(i, d));
      out << table.dates[d] << ',' << table.tickers[i] << ','
          << std::string_view(buf, end - buf) << '\n';
    }
  }
}

}  // namespace qubofolio
