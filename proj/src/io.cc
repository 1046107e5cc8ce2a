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

#include "qubofolio/io.h"

#include <charconv>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string_view>

#include "json.hpp"
#include "qubofolio/error.h"
#include "qubofolio/market_data.h"

namespace qubofolio {
namespace {

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

const json& field(const json& root, const char* name) {
  auto it = root.find(name);
  if (it == root.end()) fail(ErrorCode::kSpec, std::string(name) + ": missing");
  return *it;
}

double number_at(const json& value, const std::string& path) {
  if (!value.is_number()) fail(ErrorCode::kSpec, path + ": expected a number");
  return value.get<double>();
}

int integer_at(const json& value, const std::string& path) {
  if (!value.is_number_integer()) {
    fail(ErrorCode::kSpec, path + ": expected an integer");
  }
  const auto v = value.get<std::int64_t>();
  if (v < 0 || v > std::numeric_limits<int>::max()) {
    fail(ErrorCode::kSpec, path + ": out of range");
  }
  return static_cast<int>(v);
}

double optional_number(const json& root, const char* name, double fallback) {
  auto it = root.find(name);
  if (it == root.end() || it->is_null()) return fallback;
  return number_at(*it, name);
}

const json& array_at(const json& value, const std::string& path,
                     std::size_t size) {
  if (!value.is_array()) fail(ErrorCode::kSpec, path + ": expected an array");
  if (value.size() != size) {
    fail(ErrorCode::kSpec, path + ": expected " + std::to_string(size) +
                               " entries, got " + std::to_string(value.size()));
  }
  return value;
}

void read_inline_data(const json& root, ProblemSpec& spec) {
  const int n = spec.num_assets;
  const int T = spec.horizon;
  const json& prices = array_at(field(root, "prices"), "prices", n);
  spec.prices.unit = spec.params.unit;
  spec.prices.p.resize(n, T + 1);
  for (int i = 0; i < n; ++i) {
    const std::string row_path = "prices[" + std::to_string(i) + "]";
    const json& row = array_at(prices[i], row_path, T + 1);
    for (int t = 0; t <= T; ++t) {
      spec.prices.p(i, t) =
          number_at(row[t], row_path + "[" + std::to_string(t) + "]");
    }
  }
  const json& covs = array_at(field(root, "covariances"), "covariances", T);
  spec.covariances.sigma.assign(T, Eigen::MatrixXd(n, n));
  spec.covariances.clipped_mass.assign(T, 0.0);
  for (int t = 0; t < T; ++t) {
    const std::string mat_path = "covariances[" + std::to_string(t) + "]";
    const json& mat = array_at(covs[t], mat_path, n);
    for (int a = 0; a < n; ++a) {
      const std::string row_path = mat_path + "[" + std::to_string(a) + "]";
      const json& row = array_at(mat[a], row_path, n);
      for (int b = 0; b < n; ++b) {
        spec.covariances.sigma[t](a, b) =
            number_at(row[b], row_path + "[" + std::to_string(b) + "]");
      }
    }
  }
}

void read_price_file(const json& root, const std::string& base_dir,
                     ProblemSpec& spec) {
  const json& path_value = field(root, "price_csv");
  if (!path_value.is_string()) fail(ErrorCode::kSpec, "price_csv: expected a path");
  std::filesystem::path path = path_value.get<std::string>();
  if (path.is_relative()) path = std::filesystem::path(base_dir) / path;
  const int window = integer_at(field(root, "cov_window"), "cov_window");

  LoadOptions options;
  if (auto it = root.find("tickers"); it != root.end()) {
    if (!it->is_array()) fail(ErrorCode::kSpec, "tickers: expected an array");
    for (std::size_t i = 0; i < it->size(); ++i) {
      if (!(*it)[i].is_string()) {
        fail(ErrorCode::kSpec, "tickers[" + std::to_string(i) + "]: expected a string");
      }
      options.tickers.push_back((*it)[i].get<std::string>());
    }
  }
  PriceTable table = load_prices(path.string(), options);
  if (table.num_assets() < spec.num_assets) {
    fail(ErrorCode::kSpec, "n: price file has only " +
                               std::to_string(table.num_assets()) + " usable tickers");
  }
  if (table.num_assets() > spec.num_assets) {
    table.tickers.resize(spec.num_assets);
    table.close.conservativeResize(spec.num_assets, Eigen::NoChange);
  }
  std::string start;
  if (auto it = root.find("start"); it != root.end()) {
    if (!it->is_string()) fail(ErrorCode::kSpec, "start: expected an ISO date");
    start = it->get<std::string>();
  } else {
    start = default_start(table, window);
  }
  bool raw = false;
  if (auto it = root.find("raw_prices"); it != root.end()) {
    if (!it->is_boolean()) fail(ErrorCode::kSpec, "raw_prices: expected a boolean");
    raw = it->get<bool>();
  }
  spec.prices = raw ? raw_blocks(table, start, spec.horizon)
                    : normalize_blocks(table, spec.params.unit, start, spec.horizon);
  spec.covariances = estimate_covariance(table, window, start, spec.horizon);
}

void check_stream(std::ostream& out, const std::string& what) {
  if (!out) fail(ErrorCode::kIo, "failed writing " + what);
}

// Parses one whitespace-separated token as a number, or throws kParse.
template <typename T>
T parse_token(std::string_view token, int line, const char* what) {
  T value{};
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    fail(ErrorCode::kParse, "line " + std::to_string(line) + ": bad " + what +
                                " '" + std::string(token) + "'");
  }
  return value;
}

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    fail(ErrorCode::kParse, e.what());
  }
}

}  // namespace

std::string format_double(double value) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, ptr);
}

ProblemSpec problem_from_json(const std::string& text, const std::string& base_dir) {
  const json root = parse_json(text);
  if (!root.is_object()) fail(ErrorCode::kSpec, "root: expected an object");
  ProblemSpec spec;
  spec.num_assets = integer_at(field(root, "n"), "n");
  spec.horizon = integer_at(field(root, "T"), "T");
  spec.max_blocks = integer_at(field(root, "k"), "k");
  spec.max_selected = integer_at(field(root, "B"), "B");
  spec.capital_units = integer_at(field(root, "C"), "C");
  spec.params.risk_aversion = optional_number(root, "q", 0.0);
  spec.params.transaction_rate = optional_number(root, "delta", 0.0);
  spec.params.cash_rate = optional_number(root, "rho_c", 0.0);
  spec.params.short_rate = optional_number(root, "rho_s", 0.0);
  spec.params.unit = optional_number(root, "u", 1.0);
  if (auto it = root.find("P"); it != root.end() && !it->is_null()) {
    spec.params.penalty = number_at(*it, "P");
  }
  if (auto it = root.find("signed_risk"); it != root.end()) {
    if (!it->is_boolean()) fail(ErrorCode::kSpec, "signed_risk: expected a boolean");
    spec.signed_risk = it->get<bool>();
  }
  if (spec.num_assets < 1) fail(ErrorCode::kSpec, "n: must be at least 1");
  if (spec.horizon < 1) fail(ErrorCode::kSpec, "T: must be at least 1");

  if (root.contains("price_csv")) {
    read_price_file(root, base_dir, spec);
  } else {
    read_inline_data(root, spec);
  }
  spec.validate();
  return spec;
}

ProblemSpec load_problem(const std::string& path) {
  const std::string base = std::filesystem::path(path).parent_path().string();
  return problem_from_json(read_file(path), base.empty() ? "." : base);
}

std::string problem_to_json(const ProblemSpec& spec) {
  ordered_json root;
  root["n"] = spec.num_assets;
  root["T"] = spec.horizon;
  root["k"] = spec.max_blocks;
  root["B"] = spec.max_selected;
  root["C"] = spec.capital_units;
  root["q"] = spec.params.risk_aversion;
  root["delta"] = spec.params.transaction_rate;
  root["rho_c"] = spec.params.cash_rate;
  root["rho_s"] = spec.params.short_rate;
  root["u"] = spec.params.unit;
  if (spec.params.penalty) root["P"] = *spec.params.penalty;
  root["signed_risk"] = spec.signed_risk;
  ordered_json prices = ordered_json::array();
  for (int i = 0; i < spec.prices.p.rows(); ++i) {
    ordered_json row = ordered_json::array();
    for (int t = 0; t < spec.prices.p.cols(); ++t) row.push_back(spec.prices.p(i, t));
    prices.push_back(std::move(row));
  }
  root["prices"] = std::move(prices);
  ordered_json covs = ordered_json::array();
  for (const auto& sigma : spec.covariances.sigma) {
    ordered_json mat = ordered_json::array();
    for (int a = 0; a < sigma.rows(); ++a) {
      ordered_json row = ordered_json::array();
      for (int b = 0; b < sigma.cols(); ++b) row.push_back(sigma(a, b));
      mat.push_back(std::move(row));
    }
    covs.push_back(std::move(mat));
  }
  root["covariances"] = std::move(covs);
  return root.dump() + "\n";
}

void write_qubo_text(const SparseQubo& qubo, std::ostream& out) {
  out << "p qubo " << qubo.num_vars << ' ' << qubo.terms.size() << ' '
      << format_double(qubo.offset) << '\n';
  for (const auto& t : qubo.terms) {
    out << t.i << ' ' << t.j << ' ' << format_double(t.value) << '\n';
  }
  check_stream(out, "QUBO");
}

SparseQubo read_qubo_text(std::istream& in) {
  SparseQubo qubo;
  std::string line;
  int line_no = 0;
  bool have_header = false;
  std::int64_t declared = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto tokens = split_ws(line);
    if (tokens.empty() || tokens[0].front() == '#') continue;
    if (!have_header) {
      if (tokens.size() != 5 || tokens[0] != "p" || tokens[1] != "qubo") {
        fail(ErrorCode::kParse, "line " + std::to_string(line_no) +
                                    ": expected 'p qubo <vars> <terms> <offset>'");
      }
      qubo.num_vars = parse_token<std::int64_t>(tokens[2], line_no, "variable count");
      declared = parse_token<std::int64_t>(tokens[3], line_no, "term count");
      qubo.offset = parse_token<double>(tokens[4], line_no, "offset");
      if (qubo.num_vars < 0 || declared < 0) {
        fail(ErrorCode::kParse, "line " + std::to_string(line_no) + ": negative count");
      }
      have_header = true;
      continue;
    }
    if (tokens.size() != 3) {
      fail(ErrorCode::kParse, "line " + std::to_string(line_no) + ": expected 'i j value'");
    }
    SparseTerm term;
    term.i = parse_token<std::int64_t>(tokens[0], line_no, "index");
    term.j = parse_token<std::int64_t>(tokens[1], line_no, "index");
    term.value = parse_token<double>(tokens[2], line_no, "value");
    if (term.i > term.j) std::swap(term.i, term.j);
    if (term.i < 0 || term.j >= qubo.num_vars) {
      fail(ErrorCode::kParse, "line " + std::to_string(line_no) + ": index out of range");
    }
    if (term.value != 0.0) qubo.terms.push_back(term);
  }
  if (!have_header) fail(ErrorCode::kParse, "missing 'p qubo' header");
  std::sort(qubo.terms.begin(), qubo.terms.end(), [](const SparseTerm& a, const SparseTerm& b) {
    return a.i != b.i ? a.i < b.i : a.j < b.j;
  });
  for (std::size_t k = 1; k < qubo.terms.size(); ++k) {
    if (qubo.terms[k].i == qubo.terms[k - 1].i && qubo.terms[k].j == qubo.terms[k - 1].j) {
      fail(ErrorCode::kParse, "duplicate term (" + std::to_string(qubo.terms[k].i) + ", " +
                                  std::to_string(qubo.terms[k].j) + ")");
    }
  }
  (void)declared;
  return qubo;
}

void write_ising_text(const IsingModel& ising, std::ostream& out) {
  std::vector<SparseTerm> entries;
  for (std::int64_t i = 0; i < ising.num_spins; ++i) {
    if (ising.h[i] != 0.0) entries.push_back({i, i, ising.h[i]});
  }
  entries.insert(entries.end(), ising.couplings.begin(), ising.couplings.end());
  std::sort(entries.begin(), entries.end(), [](const SparseTerm& a, const SparseTerm& b) {
    return a.i != b.i ? a.i < b.i : a.j < b.j;
  });
  out << "p ising " << ising.num_spins << ' ' << entries.size() << ' '
      << format_double(ising.offset) << '\n';
  for (const auto& e : entries) {
    out << e.i << ' ' << e.j << ' ' << format_double(e.value) << '\n';
  }
  check_stream(out, "Ising model");
}

std::string bqp_to_json(const BqpView& bqp) {
  const SparseQubo objective = to_sparse(bqp.objective);
  ordered_json root;
  root["num_vars"] = objective.num_vars;
  root["offset"] = objective.offset;
  ordered_json terms = ordered_json::array();
  for (const auto& t : objective.terms) terms.push_back({t.i, t.j, t.value});
  root["objective"] = std::move(terms);
  ordered_json rows = ordered_json::array();
  for (const auto& r : bqp.rows) {
    ordered_json row;
    row["step"] = r.step;
    row["kind"] = r.kind == ConstraintKind::kAssetCount ? "asset_count" : "cash";
    row["index"] = r.index;
    row["coefficient"] = r.coefficient;
    row["rhs"] = r.rhs;
    rows.push_back(std::move(row));
  }
  root["constraints"] = std::move(rows);
  return root.dump() + "\n";
}

std::string rle_encode(const Assignment& bits) {
  std::string out;
  std::size_t i = 0;
  while (i < bits.size()) {
    std::size_t j = i;
    while (j < bits.size() && bits[j] == bits[i]) ++j;
    if (!out.empty()) out += ',';
    out += bits[i] ? '1' : '0';
    out += '*';
    out += std::to_string(j - i);
    i = j;
  }
  return out;
}

Assignment rle_decode(const std::string& text) {
  Assignment bits;
  std::string_view rest = text;
  while (!rest.empty()) {
    const std::size_t comma = rest.find(',');
    const std::string_view run = rest.substr(0, comma);
    rest = comma == std::string_view::npos ? std::string_view() : rest.substr(comma + 1);
    if (run.size() < 3 || (run[0] != '0' && run[0] != '1') || run[1] != '*') {
      fail(ErrorCode::kParse, "bits: bad run '" + std::string(run) + "'");
    }
    const auto count = parse_token<std::uint64_t>(run.substr(2), 1, "run length");
    if (count == 0) fail(ErrorCode::kParse, "bits: empty run");
    bits.insert(bits.end(), count, static_cast<std::uint8_t>(run[0] - '0'));
  }
  return bits;
}

std::string report_to_json(const SolveReport& report) {
  ordered_json root;
  root["solver"] = report.solver;
  root["seed"] = report.seed;
  root["best_energy"] = report.best_energy;
  root["lower_bound"] = report.lower_bound ? ordered_json(*report.lower_bound) : ordered_json();
  root["tts_seconds"] = report.tts;
  root["iterations"] = report.iterations;
  ordered_json trace = ordered_json::array();
  for (const auto& [t, e] : report.trace) trace.push_back({t, e});
  root["trace"] = std::move(trace);
  root["bits"] = rle_encode(report.best);
  return root.dump() + "\n";
}

SolveReport report_from_json(const std::string& text) {
  const json root = parse_json(text);
  SolveReport report;
  try {
    report.solver = root.at("solver").get<std::string>();
    report.seed = root.at("seed").get<std::uint64_t>();
    report.best_energy = root.at("best_energy").get<double>();
    if (!root.at("lower_bound").is_null()) {
      report.lower_bound = root.at("lower_bound").get<double>();
    }
    report.tts = root.at("tts_seconds").get<double>();
    report.iterations = root.at("iterations").get<std::uint64_t>();
    for (const auto& entry : root.at("trace")) {
      report.trace.emplace_back(entry.at(0).get<double>(), entry.at(1).get<double>());
    }
    report.best = rle_decode(root.at("bits").get<std::string>());
  } catch (const json::exception& e) {
    fail(ErrorCode::kParse, std::string("solution report: ") + e.what());
  }
  return report;
}

std::string quantum_run_to_json(const QuantumRun& run) {
  ordered_json root;
  root["algo"] = run.algo;
  root["qubits"] = run.qubits;
  root["ground_energy"] = run.ground_energy;
  root["ground_probability"] = run.ground_probability;
  root["expectation"] = run.expectation;
  root["best_bits"] = run.best_bits;
  root["best_energy"] = run.best_energy;
  root["params"] = run.params;
  ordered_json hist = ordered_json::object();
  for (const auto& [bits, count] : run.samples_hist) hist[bits] = count;
  root["samples_hist"] = std::move(hist);
  return root.dump() + "\n";
}

std::string metrics_to_json(const Metrics& metrics, const ObjectiveBreakdown& breakdown,
                            double objective) {
  ordered_json root;
  root["objective"] = objective;
  root["feasible"] = metrics.feasible;
  ordered_json parts;
  parts["risk"] = breakdown.risk;
  parts["profit"] = breakdown.profit;
  parts["transaction"] = breakdown.transaction;
  parts["liquidation"] = breakdown.liquidation;
  parts["cash_interest"] = breakdown.cash_interest;
  parts["short_cost"] = breakdown.short_cost;
  parts["penalty"] = breakdown.penalty;
  root["breakdown"] = std::move(parts);
  root["gross_profit"] = metrics.gross_profit;
  root["net_profit"] = metrics.net_profit;
  root["realized_variance"] = metrics.realized_variance;
  root["no_risk"] = metrics.no_risk;
  switch (metrics.sharpe_status) {
    case SharpeStatus::kValue:
      root["sharpe"] = metrics.sharpe_annualized;
      break;
    case SharpeStatus::kNoRisk:
      root["sharpe"] = "no_risk";
      break;
    case SharpeStatus::kUndefined:
      root["sharpe"] = "undefined";
      break;
  }
  root["total_transaction_cost"] = metrics.total_transaction_cost;
  root["total_liquidation_cost"] = metrics.total_liquidation_cost;
  root["total_short_cost"] = metrics.total_short_cost;
  root["total_cash_interest"] = metrics.total_cash_interest;
  root["step_pnl"] = metrics.step_pnl;
  return root.dump(2) + "\n";
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::kIo, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(ErrorCode::kIo, "cannot create " + path);
  out << contents;
  check_stream(out, path);
}

}  // namespace qubofolio
