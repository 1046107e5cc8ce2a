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

#include "qubofolio/qubofolio.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <sstream>
#include <string>

#include "qubofolio/error.h"
#include "qubofolio/evaluation.h"
#include "qubofolio/instances.h"
#include "qubofolio/io.h"
#include "qubofolio/model.h"
#include "qubofolio/quantum.h"
#include "qubofolio/qubo.h"
#include "qubofolio/solvers.h"

struct qf_problem {
  qubofolio::ProblemSpec spec;
};

struct qf_qubo {
  qubofolio::SparseQubo sparse;
  qubofolio::BlockQubo block;
};

struct qf_report {
  qubofolio::SolveReport report;
};

namespace {

using qubofolio::ErrorCode;

thread_local std::string last_error;

template <typename F>
qf_status guarded(F&& body) {
  try {
    body();
    last_error.clear();
    return QF_OK;
  } catch (const qubofolio::Error& e) {
    last_error = e.what();
    return static_cast<qf_status>(static_cast<int>(e.code()));
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return QF_ERR_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return QF_ERR_INTERNAL;
  }
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void require(const void* p, const char* what) {
  if (p == nullptr) qubofolio::fail(ErrorCode::kSpec, std::string(what) + ": null");
}

qubofolio::SolveBudget to_budget(const qf_budget* b) {
  qubofolio::SolveBudget budget;
  if (b == nullptr) return budget;
  budget.time_limit = b->time_limit;
  budget.max_iterations = b->max_iterations;
  budget.seed = b->seed;
  budget.workers = b->workers;
  if (b->has_target) budget.target_energy = b->target_energy;
  return budget;
}

qf_qubo* wrap(qubofolio::SparseQubo sparse) {
  auto* q = new qf_qubo;
  q->block = qubofolio::from_sparse(sparse);
  q->sparse = std::move(sparse);
  return q;
}

}  // namespace

extern "C" {

const char* qf_version(void) { return "0.1.0"; }

const char* qf_last_error(void) { return last_error.c_str(); }

void qf_string_free(char* s) { std::free(s); }

void qf_budget_init(qf_budget* budget) {
  if (budget == nullptr) return;
  const qubofolio::SolveBudget d;
  budget->time_limit = d.time_limit;
  budget->max_iterations = d.max_iterations;
  budget->seed = d.seed;
  budget->workers = d.workers;
  budget->has_target = 0;
  budget->target_energy = 0.0;
}

void qf_quantum_options_init(qf_quantum_options* options) {
  if (options == nullptr) return;
  const qubofolio::AnnealSchedule d;
  options->algo = "anneal";
  options->layers = 1;
  options->tau = d.total_time;
  options->dt = d.dt;
  options->cosine_schedule = 0;
  options->shots = 1024;
  options->seed = 0;
}

qf_status qf_problem_load(const char* path, qf_problem** out) {
  return guarded([&] {
    require(path, "path");
    require(out, "out");
    *out = new qf_problem{qubofolio::load_problem(path)};
  });
}

qf_status qf_problem_from_json(const char* text, const char* base_dir, qf_problem** out) {
  return guarded([&] {
    require(text, "text");
    require(out, "out");
    *out = new qf_problem{qubofolio::problem_from_json(text, base_dir ? base_dir : ".")};
  });
}

qf_status qf_problem_toy(int n, int T, uint64_t seed, double q, qf_problem** out) {
  return guarded([&] {
    require(out, "out");
    *out = new qf_problem{qubofolio::toy_problem(n, T, seed, q)};
  });
}

qf_status qf_problem_set_q(qf_problem* problem, double q) {
  return guarded([&] {
    require(problem, "problem");
    problem->spec.params.risk_aversion = q;
  });
}

qf_status qf_problem_to_json(const qf_problem* problem, char** out) {
  return guarded([&] {
    require(problem, "problem");
    require(out, "out");
    *out = copy_string(qubofolio::problem_to_json(problem->spec));
  });
}

void qf_problem_free(qf_problem* problem) { delete problem; }

qf_status qf_qubo_build(const qf_problem* problem, qf_qubo** out) {
  return guarded([&] {
    require(problem, "problem");
    require(out, "out");
    auto* q = new qf_qubo;
    q->block = qubofolio::build_qubo(problem->spec);
    q->sparse = qubofolio::to_sparse(q->block);
    *out = q;
  });
}

qf_status qf_qubo_read(const char* path, qf_qubo** out) {
  return guarded([&] {
    require(path, "path");
    require(out, "out");
    std::istringstream in(qubofolio::read_file(path));
    *out = wrap(qubofolio::read_qubo_text(in));
  });
}

qf_status qf_qubo_write(const qf_qubo* qubo, const char* path) {
  return guarded([&] {
    require(qubo, "qubo");
    require(path, "path");
    std::ostringstream out;
    qubofolio::write_qubo_text(qubo->sparse, out);
    qubofolio::write_file(path, out.str());
  });
}

qf_status qf_qubo_write_ising(const qf_qubo* qubo, const char* path) {
  return guarded([&] {
    require(qubo, "qubo");
    require(path, "path");
    std::ostringstream out;
    qubofolio::write_ising_text(qubofolio::to_ising(qubo->sparse), out);
    qubofolio::write_file(path, out.str());
  });
}

int64_t qf_qubo_num_vars(const qf_qubo* qubo) {
  return qubo == nullptr ? -1 : qubo->sparse.num_vars;
}

void qf_qubo_free(qf_qubo* qubo) { delete qubo; }

qf_status qf_bqp_write(const qf_problem* problem, const char* path) {
  return guarded([&] {
    require(problem, "problem");
    require(path, "path");
    qubofolio::write_file(path, qubofolio::bqp_to_json(qubofolio::build_bqp(problem->spec)));
  });
}

qf_status qf_solve(const qf_qubo* qubo, const char* solver, const qf_budget* budget,
                   qf_report** out) {
  return guarded([&] {
    require(qubo, "qubo");
    require(solver, "solver");
    require(out, "out");
    *out = new qf_report{qubofolio::solve(solver, qubo->block, to_budget(budget))};
  });
}

qf_status qf_report_to_json(const qf_report* report, char** out) {
  return guarded([&] {
    require(report, "report");
    require(out, "out");
    *out = copy_string(qubofolio::report_to_json(report->report));
  });
}

qf_status qf_report_read(const char* path, qf_report** out) {
  return guarded([&] {
    require(path, "path");
    require(out, "out");
    *out = new qf_report{qubofolio::report_from_json(qubofolio::read_file(path))};
  });
}

double qf_report_best_energy(const qf_report* report) {
  return report == nullptr ? 0.0 : report->report.best_energy;
}

void qf_report_free(qf_report* report) { delete report; }

qf_status qf_quantum_run(const qf_qubo* qubo, const qf_quantum_options* options,
                         char** out_json) {
  return guarded([&] {
    require(qubo, "qubo");
    require(options, "options");
    require(out_json, "out_json");
    qubofolio::check_qubit_cap(qubo->sparse.num_vars);
    const qubofolio::IsingModel ising = qubofolio::to_ising(qubo->sparse);
    const std::string algo = options->algo ? options->algo : "";
    qubofolio::QuantumRun run;
    if (algo == "qaoa") {
      if (options->layers < 0) qubofolio::fail(ErrorCode::kSpec, "layers: must be >= 0");
      if (options->layers == 0) {
        run = qubofolio::qaoa_run(ising, {}, options->shots, options->seed);
      } else {
        run = qubofolio::qaoa_optimize(ising, options->layers, {}, options->shots,
                                       options->seed);
      }
    } else if (algo == "vqe") {
      run = qubofolio::vqe_run(ising, options->layers, {}, options->shots, options->seed);
    } else if (algo == "anneal") {
      qubofolio::AnnealSchedule schedule;
      schedule.total_time = options->tau;
      schedule.dt = options->dt;
      schedule.envelope = options->cosine_schedule ? qubofolio::Envelope::kCosine
                                                   : qubofolio::Envelope::kLinear;
      run = qubofolio::anneal_run(ising, schedule, options->shots, options->seed);
    } else {
      qubofolio::fail(ErrorCode::kSpec, "algo: expected qaoa, vqe or anneal, got '" + algo + "'");
    }
    *out_json = copy_string(qubofolio::quantum_run_to_json(run));
  });
}

qf_status qf_sweep(const qf_problem* problem, const double* q_values, size_t num_q,
                   const char* solver, const qf_budget* budget, char** out_csv,
                   size_t* failed_rows) {
  size_t failed = 0;
  size_t rows = 0;
  const qf_status status = guarded([&] {
    require(problem, "problem");
    require(solver, "solver");
    require(out_csv, "out_csv");
    if (num_q > 0) require(q_values, "q_values");
    const std::vector<double> qs(q_values, q_values + num_q);
    const auto result = qubofolio::sweep_q(problem->spec, qs, solver, to_budget(budget));
    std::ostringstream csv;
    qubofolio::write_pareto_csv(result, csv);
    *out_csv = copy_string(csv.str());
    rows = result.size();
    for (const auto& r : result) {
      if (r.failed) {
        ++failed;
        last_error = "q=" + qubofolio::format_double(r.q) + ": " + r.error;
      }
    }
  });
  if (failed_rows != nullptr) *failed_rows = failed;
  if (status == QF_OK && rows > 0 && failed == rows) return QF_ERR_SWEEP_FAILED;
  return status;
}

qf_status qf_report_evaluate(const qf_problem* problem, const qf_report* report,
                             char** metrics_json, char** summary) {
  return guarded([&] {
    require(problem, "problem");
    require(report, "report");
    const auto& spec = problem->spec;
    const auto& bits = report->report.best;
    const qubofolio::VariableLayout layout(spec.num_assets, spec.horizon, spec.max_blocks,
                                           spec.max_selected, spec.capital_units);
    if (static_cast<std::int64_t>(bits.size()) != layout.total()) {
      qubofolio::fail(ErrorCode::kMismatch,
                      "solution has " + std::to_string(bits.size()) +
                          " bits but the config layout has " + std::to_string(layout.total()));
    }
    const auto breakdown = qubofolio::objective_breakdown(spec, bits);
    const auto metrics = qubofolio::economic_metrics(spec, bits);
    const double objective = qubofolio::energy(qubofolio::build_qubo(spec), bits);

    std::ostringstream text;
    auto line = [&text](const char* name, double v) {
      text << "  " << name;
      for (std::size_t i = std::strlen(name); i < 16; ++i) text << ' ';
      text << qubofolio::format_double(v) << '\n';
    };
    text << "objective breakdown\n";
    line("risk", breakdown.risk);
    line("profit", breakdown.profit);
    line("transaction", breakdown.transaction);
    line("liquidation", breakdown.liquidation);
    line("cash_interest", breakdown.cash_interest);
    line("short_cost", breakdown.short_cost);
    line("penalty", breakdown.penalty);
    line("total", objective);
    text << "feasible          " << (metrics.feasible ? "true" : "false") << '\n';
    text << "metrics\n";
    line("gross_profit", metrics.gross_profit);
    line("net_profit", metrics.net_profit);
    line("variance", metrics.realized_variance);
    switch (metrics.sharpe_status) {
      case qubofolio::SharpeStatus::kValue:
        line("sharpe", metrics.sharpe_annualized);
        break;
      case qubofolio::SharpeStatus::kNoRisk:
        text << "  sharpe          no_risk\n";
        break;
      case qubofolio::SharpeStatus::kUndefined:
        text << "  sharpe          undefined\n";
        break;
    }
    if (metrics_json != nullptr) {
      *metrics_json = copy_string(qubofolio::metrics_to_json(metrics, breakdown, objective));
    }
    if (summary != nullptr) *summary = copy_string(text.str());
  });
}

}  // extern "C"
