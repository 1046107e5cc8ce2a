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

#include "qubofolio/quantum.h"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <numbers>
#include <numeric>

#include "qubofolio/error.h"

namespace qubofolio {
namespace {

using Amplitude = StateVector::Amplitude;

// Samples, histogram, lowest-energy sample and summary numbers.
void fill_outcome(QuantumRun& run, const DiagonalCost& cost,
                  const std::vector<double>& probs, int shots,
                  std::mt19937_64& rng) {
  run.qubits = cost.qubits;
  run.ground_energy = cost.ground_energy();
  run.ground_probability = cost.ground_probability(probs);
  run.expectation = cost.expectation(probs);
  std::uint64_t best = 0;
  double best_energy = std::numeric_limits<double>::infinity();
  for (std::uint64_t z : sample_states(probs, shots, rng)) {
    run.samples_hist[basis_bits(z, cost.qubits)] += 1;
    if (cost.energies[z] < best_energy ||
        (cost.energies[z] == best_energy && z < best)) {
      best = z;
      best_energy = cost.energies[z];
    }
  }
  if (shots <= 0) {
    best = std::max_element(probs.begin(), probs.end()) - probs.begin();
    best_energy = cost.energies[best];
  }
  run.best_bits = basis_bits(best, cost.qubits);
  run.best_energy = best_energy;
}

double energy_spread(const DiagonalCost& cost) {
  const auto [lo, hi] = std::minmax_element(cost.energies.begin(), cost.energies.end());
  return *hi - *lo;
}

int default_evaluations(const OptimizerBudget& budget, std::size_t params) {
  return budget.max_evaluations > 0 ? budget.max_evaluations
                                    : 400 * static_cast<int>(std::max<std::size_t>(params, 1));
}

}  // namespace

int qubit_cap() {
  if (const char* env = std::getenv("QUBOFOLIO_QUBIT_CAP")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0 && v <= 40) return static_cast<int>(v);
  }
  return kDefaultQubitCap;
}

void check_qubit_cap(std::int64_t qubits) {
  const int cap = qubit_cap();
  if (qubits > cap) {
    fail(ErrorCode::kSizeCap, "instance needs " + std::to_string(qubits) +
                                  " qubits; simulator cap is " +
                                  std::to_string(cap));
  }
}

StateVector::StateVector(int qubits) : qubits_(qubits) {
  check_qubit_cap(qubits);
  amps_.assign(std::size_t{1} << qubits, Amplitude(0.0, 0.0));
  amps_[0] = 1.0;
}

StateVector StateVector::uniform(int qubits) {
  StateVector state(qubits);
  const double a = 1.0 / std::sqrt(static_cast<double>(state.dimension()));
  std::fill(state.amps_.begin(), state.amps_.end(), Amplitude(a, 0.0));
  return state;
}

double StateVector::norm_squared() const {
  long double total = 0.0L;
  for (const auto& a : amps_) total += std::norm(a);
  return static_cast<double>(total);
}

void StateVector::renormalize() {
  const double scale = 1.0 / std::sqrt(norm_squared());
  for (auto& a : amps_) a *= scale;
}

std::vector<double> StateVector::probabilities() const {
  std::vector<double> out(amps_.size());
  for (std::size_t z = 0; z < amps_.size(); ++z) out[z] = std::norm(amps_[z]);
  return out;
}

void StateVector::rx(int qubit, double angle) {
  const double c = std::cos(angle / 2), s = std::sin(angle / 2);
  const std::size_t mask = std::size_t{1} << qubit;
  for (std::size_t z = 0; z < amps_.size(); ++z) {
    if (z & mask) continue;
    const Amplitude a0 = amps_[z], a1 = amps_[z | mask];
    amps_[z] = c * a0 + Amplitude(0, -s) * a1;
    amps_[z | mask] = Amplitude(0, -s) * a0 + c * a1;
  }
}

void StateVector::ry(int qubit, double angle) {
  const double c = std::cos(angle / 2), s = std::sin(angle / 2);
  const std::size_t mask = std::size_t{1} << qubit;
  for (std::size_t z = 0; z < amps_.size(); ++z) {
    if (z & mask) continue;
    const Amplitude a0 = amps_[z], a1 = amps_[z | mask];
    amps_[z] = c * a0 - s * a1;
    amps_[z | mask] = s * a0 + c * a1;
  }
}

void StateVector::cz(int a, int b) {
  const std::size_t mask = (std::size_t{1} << a) | (std::size_t{1} << b);
  for (std::size_t z = 0; z < amps_.size(); ++z) {
    if ((z & mask) == mask) amps_[z] = -amps_[z];
  }
}

void StateVector::phase(const std::vector<double>& diagonal, double scale) {
  for (std::size_t z = 0; z < amps_.size(); ++z) {
    amps_[z] *= std::polar(1.0, -scale * diagonal[z]);
  }
}

double DiagonalCost::ground_energy() const {
  return *std::min_element(energies.begin(), energies.end());
}

double DiagonalCost::ground_probability(const std::vector<double>& probs) const {
  const double ground = ground_energy();
  const double spread = energies.empty() ? 0.0 : energy_spread(*this);
  const double tol = 1e-9 * std::max({1.0, std::abs(ground), spread});
  long double total = 0.0L;
  for (std::size_t z = 0; z < energies.size(); ++z) {
    if (energies[z] <= ground + tol) total += probs[z];
  }
  return static_cast<double>(total);
}

double DiagonalCost::expectation(const std::vector<double>& probs) const {
  long double total = 0.0L;
  for (std::size_t z = 0; z < energies.size(); ++z) total += probs[z] * energies[z];
  return static_cast<double>(total);
}

DiagonalCost diagonalize_cost(const IsingModel& ising) {
  check_qubit_cap(ising.num_spins);
  DiagonalCost cost;
  cost.qubits = static_cast<int>(ising.num_spins);
  const std::size_t dim = std::size_t{1} << cost.qubits;
  cost.energies.resize(dim);
  for (std::size_t z = 0; z < dim; ++z) {
    long double e = ising.offset;
    for (int q = 0; q < cost.qubits; ++q) e += ((z >> q) & 1 ? 1.0 : -1.0) * ising.h[q];
    for (const auto& c : ising.couplings) {
      const int si = (z >> c.i) & 1 ? 1 : -1;
      const int sj = (z >> c.j) & 1 ? 1 : -1;
      e += c.value * si * sj;
    }
    cost.energies[z] = static_cast<double>(e);
  }
  return cost;
}

std::string basis_bits(std::uint64_t z, int qubits) {
  std::string s(qubits, '0');
  for (int q = 0; q < qubits; ++q) {
    if ((z >> q) & 1) s[q] = '1';
  }
  return s;
}

std::vector<std::uint64_t> sample_states(const std::vector<double>& probs,
                                         int shots, std::mt19937_64& rng) {
  std::vector<double> cdf(probs.size());
  std::partial_sum(probs.begin(), probs.end(), cdf.begin());
  const double total = cdf.empty() ? 0.0 : cdf.back();
  std::uniform_real_distribution<double> uniform(0.0, total);
  std::vector<std::uint64_t> out;
  out.reserve(std::max(shots, 0));
  for (int s = 0; s < shots; ++s) {
    auto it = std::upper_bound(cdf.begin(), cdf.end(), uniform(rng));
    if (it == cdf.end()) --it;
    out.push_back(static_cast<std::uint64_t>(it - cdf.begin()));
  }
  return out;
}

NelderMeadResult minimize_nelder_mead(
    const std::function<double(const std::vector<double>&)>& f,
    std::vector<double> start, double step, int max_evaluations,
    double tolerance) {
  const std::size_t dim = start.size();
  NelderMeadResult result;
  std::vector<std::vector<double>> simplex(dim + 1, start);
  for (std::size_t i = 0; i < dim; ++i) simplex[i + 1][i] += step;
  std::vector<double> values(dim + 1);
  for (std::size_t i = 0; i <= dim; ++i) values[i] = f(simplex[i]);
  result.evaluations = static_cast<int>(dim + 1);

  std::vector<std::size_t> order(dim + 1);
  auto sort_simplex = [&] {
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
    std::vector<std::vector<double>> s2;
    std::vector<double> v2;
    for (std::size_t i : order) {
      s2.push_back(simplex[i]);
      v2.push_back(values[i]);
    }
    simplex.swap(s2);
    values.swap(v2);
  };
  auto blend = [&](const std::vector<double>& a, const std::vector<double>& b, double t) {
    std::vector<double> out(dim);
    for (std::size_t i = 0; i < dim; ++i) out[i] = a[i] + t * (b[i] - a[i]);
    return out;
  };

  sort_simplex();
  while (dim > 0 && result.evaluations < max_evaluations &&
         values.back() - values.front() > tolerance) {
    std::vector<double> centroid(dim, 0.0);
    for (std::size_t v = 0; v < dim; ++v) {
      for (std::size_t i = 0; i < dim; ++i) centroid[i] += simplex[v][i] / dim;
    }
    const auto reflected = blend(centroid, simplex[dim], -1.0);
    const double fr = f(reflected);
    ++result.evaluations;
    if (fr < values[0]) {
      const auto expanded = blend(centroid, simplex[dim], -2.0);
      const double fe = f(expanded);
      ++result.evaluations;
      if (fe < fr) {
        simplex[dim] = expanded;
        values[dim] = fe;
      } else {
        simplex[dim] = reflected;
        values[dim] = fr;
      }
    } else if (fr < values[dim - 1]) {
      simplex[dim] = reflected;
      values[dim] = fr;
    } else {
      const bool outside = fr < values[dim];
      const auto contracted =
          outside ? blend(centroid, reflected, 0.5) : blend(centroid, simplex[dim], 0.5);
      const double fc = f(contracted);
      ++result.evaluations;
      if (fc < (outside ? fr : values[dim])) {
        simplex[dim] = contracted;
        values[dim] = fc;
      } else {
        for (std::size_t v = 1; v <= dim; ++v) {
          simplex[v] = blend(simplex[0], simplex[v], 0.5);
          values[v] = f(simplex[v]);
        }
        result.evaluations += static_cast<int>(dim);
      }
    }
    sort_simplex();
  }
  result.x = simplex[0];
  result.value = values[0];
  return result;
}

StateVector qaoa_state(const DiagonalCost& cost, const QaoaParams& params) {
  if (params.gammas.size() != params.betas.size()) {
    fail(ErrorCode::kSpec, "QAOA needs one gamma and one beta per layer");
  }
  StateVector state = StateVector::uniform(cost.qubits);
  for (int l = 0; l < params.layers(); ++l) {
    state.phase(cost.energies, params.gammas[l]);
    for (int q = 0; q < cost.qubits; ++q) state.rx(q, 2.0 * params.betas[l]);
  }
  return state;
}

QuantumRun qaoa_run(const IsingModel& ising, const QaoaParams& params, int shots,
                    std::uint64_t seed) {
  const DiagonalCost cost = diagonalize_cost(ising);
  const StateVector state = qaoa_state(cost, params);
  QuantumRun run;
  run.algo = "qaoa";
  run.params = params.gammas;
  run.params.insert(run.params.end(), params.betas.begin(), params.betas.end());
  std::mt19937_64 rng(seed);
  fill_outcome(run, cost, state.probabilities(), shots, rng);
  return run;
}

QuantumRun qaoa_optimize(const IsingModel& ising, int layers,
                         const OptimizerBudget& budget, int shots,
                         std::uint64_t seed) {
  if (layers < 1) fail(ErrorCode::kSpec, "QAOA optimization needs p >= 1");
  const DiagonalCost cost = diagonalize_cost(ising);
  const double spread = energy_spread(cost);
  const double gamma_range = spread > 0.0 ? std::numbers::pi / spread : 1.0;
  const double beta_range = std::numbers::pi / 2;
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> uniform(0.0, 1.0);

  auto unpack = [layers](const std::vector<double>& x) {
    QaoaParams p;
    p.gammas.assign(x.begin(), x.begin() + layers);
    p.betas.assign(x.begin() + layers, x.end());
    return p;
  };
  std::vector<double> trace;
  double best_value = std::numeric_limits<double>::infinity();
  auto objective = [&](const std::vector<double>& x) {
    const double e = cost.expectation(qaoa_state(cost, unpack(x)).probabilities());
    best_value = std::min(best_value, e);
    trace.push_back(best_value);
    return e;
  };

  NelderMeadResult best;
  best.value = std::numeric_limits<double>::infinity();
  const int evals = default_evaluations(budget, 2 * layers);
  for (int r = 0; r < std::max(budget.restarts, 1); ++r) {
    std::vector<double> x0(2 * layers);
    for (int l = 0; l < layers; ++l) {
      x0[l] = gamma_range * uniform(rng);
      x0[layers + l] = beta_range * uniform(rng);
    }
    auto result = minimize_nelder_mead(objective, x0, 0.1 * std::min(gamma_range, beta_range),
                                       evals, budget.tolerance);
    if (result.value < best.value) best = std::move(result);
  }
  QuantumRun run = qaoa_run(ising, unpack(best.x), shots, rng());
  run.expectation_trace = std::move(trace);
  return run;
}

StateVector vqe_state(int qubits, int layers, const std::vector<double>& theta) {
  if (static_cast<int>(theta.size()) != qubits * layers) {
    fail(ErrorCode::kSpec, "VQE needs qubits * layers angles");
  }
  StateVector state(qubits);
  for (int l = 0; l < layers; ++l) {
    for (int q = 0; q < qubits; ++q) state.ry(q, theta[l * qubits + q]);
    if (qubits == 2) {
      state.cz(0, 1);
    } else if (qubits > 2) {
      for (int q = 0; q < qubits; ++q) state.cz(q, (q + 1) % qubits);
    }
  }
  return state;
}

QuantumRun vqe_run(const IsingModel& ising, int layers,
                   const OptimizerBudget& budget, int shots, std::uint64_t seed) {
  if (layers < 1) fail(ErrorCode::kSpec, "VQE needs at least one layer");
  const DiagonalCost cost = diagonalize_cost(ising);
  const int m = cost.qubits;
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> angle(-std::numbers::pi, std::numbers::pi);

  std::vector<double> trace;
  double best_value = std::numeric_limits<double>::infinity();
  auto objective = [&](const std::vector<double>& theta) {
    const double e = cost.expectation(vqe_state(m, layers, theta).probabilities());
    best_value = std::min(best_value, e);
    trace.push_back(best_value);
    return e;
  };

  NelderMeadResult best;
  best.value = std::numeric_limits<double>::infinity();
  const int evals = default_evaluations(budget, static_cast<std::size_t>(m * layers));
  for (int r = 0; r < std::max(budget.restarts, 1); ++r) {
    std::vector<double> x0(m * layers);
    for (auto& a : x0) a = angle(rng);
    auto result = minimize_nelder_mead(objective, x0, 0.5, evals, budget.tolerance);
    if (result.value < best.value) best = std::move(result);
  }

  const auto probs = vqe_state(m, layers, best.x).probabilities();
  QuantumRun run;
  run.algo = "vqe";
  run.params = best.x;
  fill_outcome(run, cost, probs, shots, rng);
  // The reported bit string is the most likely basis state at the optimum.
  const std::size_t top = std::max_element(probs.begin(), probs.end()) - probs.begin();
  run.best_bits = basis_bits(top, m);
  run.best_energy = cost.energies[top];
  run.expectation_trace = std::move(trace);
  return run;
}

double AnnealSchedule::driver(double s) const {
  return envelope == Envelope::kLinear ? 1.0 - s
                                       : 0.5 * (1.0 + std::cos(std::numbers::pi * s));
}

double AnnealSchedule::problem(double s) const { return 1.0 - driver(s); }

std::int64_t AnnealSchedule::steps() const {
  if (!(dt > 0.0) || !(total_time > 0.0)) {
    fail(ErrorCode::kSpec, "annealing time and dt must be positive");
  }
  if (dt >= total_time) fail(ErrorCode::kSpec, "dt must be smaller than the annealing time");
  const double ratio = total_time / dt;
  const double rounded = std::round(ratio);
  if (std::abs(ratio - rounded) > 1e-9 * ratio) {
    fail(ErrorCode::kSpec, "annealing time must be an integer multiple of dt");
  }
  return static_cast<std::int64_t>(rounded);
}

QuantumRun anneal_run(const IsingModel& ising, const AnnealSchedule& schedule,
                      int shots, std::uint64_t seed,
                      const std::function<void(const StateVector&)>& on_step) {
  const std::int64_t steps = schedule.steps();
  const DiagonalCost cost = diagonalize_cost(ising);
  double scale = 1.0;
  if (schedule.normalize) {
    double largest = 0.0;
    for (double h : ising.h) largest = std::max(largest, std::abs(h));
    for (const auto& c : ising.couplings) largest = std::max(largest, std::abs(c.value));
    if (largest > 0.0) scale = 1.0 / largest;
  }
  std::vector<double> problem(cost.energies.size());
  for (std::size_t z = 0; z < problem.size(); ++z) {
    problem[z] = scale * (cost.energies[z] - ising.offset);
  }

  StateVector state = StateVector::uniform(cost.qubits);
  const double dt = schedule.total_time / static_cast<double>(steps);
  for (std::int64_t k = 0; k < steps; ++k) {
    const double s = (static_cast<double>(k) + 0.5) / static_cast<double>(steps);
    // exp(-i A dt (-sum X)) = prod RX(-2 A dt)
    const double a = schedule.driver(s);
    for (int q = 0; q < cost.qubits; ++q) state.rx(q, -2.0 * a * dt);
    state.phase(problem, schedule.problem(s) * dt);
    if (on_step) on_step(state);
    state.renormalize();
  }

  QuantumRun run;
  run.algo = "anneal";
  run.params = {schedule.total_time, dt};
  std::mt19937_64 rng(seed);
  fill_outcome(run, cost, state.probabilities(), shots, rng);
  return run;
}

}  // namespace qubofolio
