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

// C interface to the qubofolio library. Every call returns a qf_status;
// on failure qf_last_error() holds a message for the calling thread.
// Strings returned through char** are owned by the caller and released
// with qf_string_free.

#ifndef QUBOFOLIO_QUBOFOLIO_H_
#define QUBOFOLIO_QUBOFOLIO_H_

#include <stddef.h>
#include <stdint.h>

#if defined(QUBOFOLIO_BUILDING_LIBRARY)
#define QF_API __attribute__((visibility("default")))
#else
#define QF_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum qf_status {
  QF_OK = 0,
  QF_ERR_INTERNAL = 1,
  QF_ERR_SPEC = 2,
  QF_ERR_SIZE_CAP = 3,
  QF_ERR_PARSE = 4,
  QF_ERR_SWEEP_FAILED = 5,
  QF_ERR_MISMATCH = 6,
  QF_ERR_IO = 7
} qf_status;

typedef struct qf_problem qf_problem;
typedef struct qf_qubo qf_qubo;
typedef struct qf_report qf_report;

typedef struct qf_budget {
  double time_limit;        /* seconds */
  uint64_t max_iterations;  /* 0: unlimited */
  uint64_t seed;
  int workers;
  int has_target;
  double target_energy;
} qf_budget;

typedef struct qf_quantum_options {
  const char* algo;  /* "qaoa", "vqe" or "anneal" */
  int layers;        /* qaoa, vqe */
  double tau;        /* anneal */
  double dt;         /* anneal */
  int cosine_schedule;
  int shots;
  uint64_t seed;
} qf_quantum_options;

QF_API const char* qf_version(void);
QF_API const char* qf_last_error(void);
QF_API void qf_string_free(char* s);

QF_API void qf_budget_init(qf_budget* budget);
QF_API void qf_quantum_options_init(qf_quantum_options* options);

QF_API qf_status qf_problem_load(const char* path, qf_problem** out);
QF_API qf_status qf_problem_from_json(const char* text, const char* base_dir,
                                      qf_problem** out);
QF_API qf_status qf_problem_toy(int n, int T, uint64_t seed, double q,
                                qf_problem** out);
QF_API qf_status qf_problem_set_q(qf_problem* problem, double q);
QF_API qf_status qf_problem_to_json(const qf_problem* problem, char** out);
QF_API void qf_problem_free(qf_problem* problem);

QF_API qf_status qf_qubo_build(const qf_problem* problem, qf_qubo** out);
QF_API qf_status qf_qubo_read(const char* path, qf_qubo** out);
QF_API qf_status qf_qubo_write(const qf_qubo* qubo, const char* path);
QF_API qf_status qf_qubo_write_ising(const qf_qubo* qubo, const char* path);
QF_API int64_t qf_qubo_num_vars(const qf_qubo* qubo);
QF_API void qf_qubo_free(qf_qubo* qubo);

/* Objective plus explicit constraint rows as JSON. */
QF_API qf_status qf_bqp_write(const qf_problem* problem, const char* path);

/* solver: "exact", "bnb", "sa" or "abs". */
QF_API qf_status qf_solve(const qf_qubo* qubo, const char* solver,
                          const qf_budget* budget, qf_report** out);
QF_API qf_status qf_report_to_json(const qf_report* report, char** out);
QF_API qf_status qf_report_read(const char* path, qf_report** out);
QF_API double qf_report_best_energy(const qf_report* report);
QF_API void qf_report_free(qf_report* report);

/* Runs a simulated quantum algorithm; writes the run JSON. */
QF_API qf_status qf_quantum_run(const qf_qubo* qubo,
                                const qf_quantum_options* options,
                                char** out_json);

/* One CSV row per q. Returns QF_ERR_SWEEP_FAILED when every row failed;
   the CSV is produced either way. */
QF_API qf_status qf_sweep(const qf_problem* problem, const double* q_values,
                          size_t num_q, const char* solver,
                          const qf_budget* budget, char** out_csv,
                          size_t* failed_rows);

/* Objective breakdown, feasibility and metrics of a solution. */
QF_API qf_status qf_report_evaluate(const qf_problem* problem,
                                    const qf_report* report,
                                    char** metrics_json, char** summary);

#ifdef __cplusplus
}  // extern "C"
#endif

#endif  // QUBOFOLIO_QUBOFOLIO_H_
