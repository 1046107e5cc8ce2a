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

// qubofolio command-line tool. Talks to the library only through the C API.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qubofolio/qubofolio.h"

namespace {

struct CliError {
  qf_status status;
};

void check(qf_status status) {
  if (status != QF_OK) throw CliError{status};
}

struct ProblemDeleter {
  void operator()(qf_problem* p) const { qf_problem_free(p); }
};
struct QuboDeleter {
  void operator()(qf_qubo* q) const { qf_qubo_free(q); }
};
struct ReportDeleter {
  void operator()(qf_report* r) const { qf_report_free(r); }
};
struct StringDeleter {
  void operator()(char* s) const { qf_string_free(s); }
};
using Problem = std::unique_ptr<qf_problem, ProblemDeleter>;
using Qubo = std::unique_ptr<qf_qubo, QuboDeleter>;
using Report = std::unique_ptr<qf_report, ReportDeleter>;
using String = std::unique_ptr<char, StringDeleter>;

struct ToyOptions {
  bool enabled = false;
  int n = 2;
  int T = 2;
  std::uint64_t seed = 0;
  double q = 0.0;
};

void add_toy_options(CLI::App* cmd, ToyOptions& toy) {
  cmd->add_flag("--toy", toy.enabled, "Use a generated toy portfolio (k=1)");
  cmd->add_option("--toy-n", toy.n, "Toy asset count (1-3)")->capture_default_str();
  cmd->add_option("--toy-T", toy.T, "Toy horizon (1-2)")->capture_default_str();
  cmd->add_option("--toy-seed", toy.seed, "Toy price seed")->capture_default_str();
  cmd->add_option("--toy-q", toy.q, "Toy risk aversion")->capture_default_str();
}

Problem load_problem(const std::string& config, const ToyOptions& toy) {
  qf_problem* p = nullptr;
  if (toy.enabled) {
    check(qf_problem_toy(toy.n, toy.T, toy.seed, toy.q, &p));
  } else if (!config.empty()) {
    check(qf_problem_load(config.c_str(), &p));
  } else {
    std::fprintf(stderr, "error: one of --config or --toy is required\n");
    throw CliError{QF_ERR_SPEC};
  }
  return Problem(p);
}

Qubo build_qubo(const qf_problem* problem) {
  qf_qubo* q = nullptr;
  check(qf_qubo_build(problem, &q));
  return Qubo(q);
}

Qubo load_qubo(const std::string& qubo_path, const std::string& config,
               const ToyOptions& toy) {
  if (!qubo_path.empty()) {
    qf_qubo* q = nullptr;
    check(qf_qubo_read(qubo_path.c_str(), &q));
    return Qubo(q);
  }
  return build_qubo(load_problem(config, toy).get());
}

void emit(const std::string& path, const char* text) {
  if (path.empty() || path == "-") {
    std::fputs(text, stdout);
    return;
  }
  std::ofstream out(path, std::ios::binary);
  out << text;
  if (!out) {
    std::fprintf(stderr, "error: cannot write %s\n", path.c_str());
    throw CliError{QF_ERR_IO};
  }
}

struct BudgetOptions {
  std::string solver = "abs";
  double time_limit = 10.0;
  std::uint64_t seed = 0;
  int workers = 1;
  std::uint64_t max_iterations = 0;
};

void add_budget_options(CLI::App* cmd, BudgetOptions& b) {
  cmd->add_option("--solver", b.solver, "exact, bnb, sa or abs")
      ->check(CLI::IsMember({"exact", "bnb", "sa", "abs"}))
      ->capture_default_str();
  cmd->add_option("--time-limit", b.time_limit, "Seconds per solve")->capture_default_str();
  cmd->add_option("--seed", b.seed, "Random seed")->capture_default_str();
  cmd->add_option("--workers", b.workers, "Worker threads")->capture_default_str();
  cmd->add_option("--max-iterations", b.max_iterations, "Iteration cap, 0 for none")
      ->capture_default_str();
}

qf_budget to_budget(const BudgetOptions& b) {
  qf_budget budget;
  qf_budget_init(&budget);
  budget.time_limit = b.time_limit;
  budget.seed = b.seed;
  budget.workers = b.workers;
  budget.max_iterations = b.max_iterations;
  return budget;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Multi-period portfolio optimization as QUBO"};
  app.require_subcommand(1);
  app.set_version_flag("--version", qf_version());

  std::string config, qubo_path, out_path, solution_path;
  ToyOptions toy;
  BudgetOptions budget;

  auto* build = app.add_subcommand("build", "Write the QUBO (and optional Ising/BQP) files");
  build->add_option("--config", config, "Problem JSON");
  add_toy_options(build, toy);
  build->add_option("--out", out_path, "QUBO output path")->required();
  bool write_ising = false, write_bqp = false;
  build->add_flag("--ising", write_ising, "Also write <out>.ising");
  build->add_flag("--bqp", write_bqp, "Also write <out>.bqp.json");

  auto* solve = app.add_subcommand("solve", "Solve a QUBO and write a solution report");
  auto* qubo_opt = solve->add_option("--qubo", qubo_path, "QUBO text file");
  solve->add_option("--config", config, "Problem JSON")->excludes(qubo_opt);
  add_toy_options(solve, toy);
  add_budget_options(solve, budget);
  solve->add_option("--out", out_path, "Report path (stdout if omitted)");

  auto* quantum = app.add_subcommand("quantum", "Run a simulated quantum algorithm");
  quantum->add_option("--qubo", qubo_path, "QUBO text file");
  quantum->add_option("--config", config, "Problem JSON");
  add_toy_options(quantum, toy);
  qf_quantum_options qopt;
  qf_quantum_options_init(&qopt);
  std::string algo = "anneal", schedule = "linear";
  quantum->add_option("--algo", algo, "qaoa, vqe or anneal")
      ->check(CLI::IsMember({"qaoa", "vqe", "anneal"}))
      ->capture_default_str();
  quantum->add_option("--layers", qopt.layers, "Circuit depth p")->capture_default_str();
  quantum->add_option("--tau", qopt.tau, "Anneal time")->capture_default_str();
  quantum->add_option("--dt", qopt.dt, "Anneal time step")->capture_default_str();
  quantum->add_option("--schedule", schedule, "linear or cosine")
      ->check(CLI::IsMember({"linear", "cosine"}))
      ->capture_default_str();
  quantum->add_option("--shots", qopt.shots, "Measurement samples")->capture_default_str();
  quantum->add_option("--seed", qopt.seed, "Random seed")->capture_default_str();
  quantum->add_option("--out", out_path, "Run JSON path (stdout if omitted)");

  auto* sweep = app.add_subcommand("sweep", "Solve over a list of q values, write CSV");
  sweep->add_option("--config", config, "Problem JSON");
  add_toy_options(sweep, toy);
  std::vector<double> q_list = {0.0, 1e-6, 1e-5, 5e-5, 1e-4, 5e-4, 1e-3, 1e-2};
  sweep->add_option("--q", q_list, "Comma-separated risk-aversion values")->delimiter(',');
  add_budget_options(sweep, budget);
  sweep->add_option("--out", out_path, "CSV path (stdout if omitted)");

  auto* report = app.add_subcommand("report", "Breakdown and metrics of a solution");
  report->add_option("--solution", solution_path, "Solution report JSON")->required();
  report->add_option("--config", config, "Problem JSON");
  add_toy_options(report, toy);
  report->add_option("--out", out_path, "Metrics JSON path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : static_cast<int>(QF_ERR_SPEC);
  }

  try {
    if (*build) {
      Problem problem = load_problem(config, toy);
      Qubo qubo = build_qubo(problem.get());
      check(qf_qubo_write(qubo.get(), out_path.c_str()));
      std::printf("wrote %s (%lld variables)\n", out_path.c_str(),
                  static_cast<long long>(qf_qubo_num_vars(qubo.get())));
      if (write_ising) {
        const std::string path = out_path + ".ising";
        check(qf_qubo_write_ising(qubo.get(), path.c_str()));
        std::printf("wrote %s\n", path.c_str());
      }
      if (write_bqp) {
        const std::string path = out_path + ".bqp.json";
        check(qf_bqp_write(problem.get(), path.c_str()));
        std::printf("wrote %s\n", path.c_str());
      }
    } else if (*solve) {
      if (qubo_path.empty() && config.empty() && !toy.enabled) {
        std::fprintf(stderr, "error: one of --qubo, --config or --toy is required\n");
        return QF_ERR_SPEC;
      }
      Qubo qubo = load_qubo(qubo_path, config, toy);
      const qf_budget b = to_budget(budget);
      qf_report* r = nullptr;
      check(qf_solve(qubo.get(), budget.solver.c_str(), &b, &r));
      Report result(r);
      char* json = nullptr;
      check(qf_report_to_json(result.get(), &json));
      emit(out_path, String(json).get());
    } else if (*quantum) {
      Qubo qubo = load_qubo(qubo_path, config, toy);
      qopt.algo = algo.c_str();
      qopt.cosine_schedule = schedule == "cosine";
      char* json = nullptr;
      check(qf_quantum_run(qubo.get(), &qopt, &json));
      emit(out_path, String(json).get());
    } else if (*sweep) {
      Problem problem = load_problem(config, toy);
      const qf_budget b = to_budget(budget);
      char* csv = nullptr;
      std::size_t failed = 0;
      const qf_status status = qf_sweep(problem.get(), q_list.data(), q_list.size(),
                                        budget.solver.c_str(), &b, &csv, &failed);
      String owned(csv);
      if (csv != nullptr) emit(out_path, csv);
      if (failed > 0) {
        std::fprintf(stderr, "warning: %zu of %zu rows failed (%s)\n", failed,
                     q_list.size(), qf_last_error());
      }
      check(status);
    } else if (*report) {
      Problem problem = load_problem(config, toy);
      qf_report* r = nullptr;
      check(qf_report_read(solution_path.c_str(), &r));
      Report solution(r);
      char* json = nullptr;
      char* summary = nullptr;
      check(qf_report_evaluate(problem.get(), solution.get(), &json, &summary));
      String owned_json(json), owned_summary(summary);
      std::fputs(summary, stdout);
      if (!out_path.empty()) {
        emit(out_path, json);
      } else {
        std::fputs(json, stdout);
      }
    }
  } catch (const CliError& e) {
    const char* message = qf_last_error();
    if (message != nullptr && *message != '\0') std::fprintf(stderr, "error: %s\n", message);
    return static_cast<int>(e.status);
  }
  return 0;
}
