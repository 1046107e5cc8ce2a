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

#ifndef QUBOFOLIO_QUANTUM_H_
#define QUBOFOLIO_QUANTUM_H_

#include <complex>
#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "qubofolio/qubo.h"

namespace qubofolio {

// Spin convention: basis state z has bit q = (z >> q) & 1 on qubit q, and
// bit 1 is spin +1. Qubit q is QUBO variable q.

constexpr int kDefaultQubitCap = 20;

// QUBOFOLIO_QUBIT_CAP when set to a positive integer, otherwise 20.
int qubit_cap();
void check_qubit_cap(std::int64_t qubits);

class StateVector {
 public:
  using Amplitude = std::complex<double>;

  // |0...0>
  explicit StateVector(int qubits);
  // (|0> + |1>)^m / 2^(m/2)
  static StateVector uniform(int qubits);

  int qubits() const { return qubits_; }
  std::size_t dimension() const { return amps_.size(); }
  const std::vector<Amplitude>& amplitudes() const { return amps_; }
  double norm_squared() const;
  void renormalize();
  std::vector<double> probabilities() const;

  // exp(-i angle X / 2)
  void rx(int qubit, double angle);
  // exp(-i angle Y / 2)
  void ry(int qubit, double angle);
  void cz(int a, int b);
  // amp_z *= exp(-i scale * diagonal[z])
  void phase(const std::vector<double>& diagonal, double scale);

 private:
  int qubits_;
  std::vector<Amplitude> amps_;
};

// energies[z] = F(spins of z) + offset for every basis state.
struct DiagonalCost {
  int qubits = 0;
  std::vector<double> energies;

  double ground_energy() const;
  // Total probability on basis states within 1e-9 (relative) of the ground.
  double ground_probability(const std::vector<double>& probabilities) const;
  double expectation(const std::vector<double>& probabilities) const;
};

DiagonalCost diagonalize_cost(const IsingModel& ising);

// Bit string with character q holding qubit q.
std::string basis_bits(std::uint64_t z, int qubits);

// Draws `shots` basis states from |amp|^2 by inverse CDF.
std::vector<std::uint64_t> sample_states(const std::vector<double>& probabilities,
                                         int shots, std::mt19937_64& rng);

struct QaoaParams {
  std::vector<double> gammas;
  std::vector<double> betas;

  int layers() const { return static_cast<int>(gammas.size()); }
};

struct QuantumRun {
  std::string algo;
  int qubits = 0;
  double ground_energy = 0.0;
  double ground_probability = 0.0;
  double expectation = 0.0;
  std::string best_bits;
  double best_energy = 0.0;
  std::vector<double> params;
  std::map<std::string, int> samples_hist;
  std::vector<double> expectation_trace;  // best expectation per evaluation
};

struct OptimizerBudget {
  int restarts = 8;
  int max_evaluations = 0;  // per restart; 0: 400 per parameter
  double tolerance = 1e-12;
};

struct NelderMeadResult {
  std::vector<double> x;
  double value = 0.0;
  int evaluations = 0;
};

// Downhill simplex with the usual coefficients (1, 2, 0.5, 0.5). Stops when
// the spread of simplex values falls to `tolerance` or the evaluation budget
// is spent.
NelderMeadResult minimize_nelder_mead(
    const std::function<double(const std::vector<double>&)>& f,
    std::vector<double> start, double step, int max_evaluations,
    double tolerance);

StateVector qaoa_state(const DiagonalCost& cost, const QaoaParams& params);
QuantumRun qaoa_run(const IsingModel& ising, const QaoaParams& params,
                    int shots, std::uint64_t seed);
QuantumRun qaoa_optimize(const IsingModel& ising, int layers,
                         const OptimizerBudget& budget, int shots,
                         std::uint64_t seed);

// Layers of per-qubit RY followed by a ring of CZ, on |0...0>.
StateVector vqe_state(int qubits, int layers, const std::vector<double>& theta);
QuantumRun vqe_run(const IsingModel& ising, int layers,
                   const OptimizerBudget& budget, int shots, std::uint64_t seed);

enum class Envelope { kLinear, kCosine };

struct AnnealSchedule {
  double total_time = 50.0;
  double dt = 0.01;
  Envelope envelope = Envelope::kLinear;
  // Divide H_F by its largest |h| or |J| before evolving.
  bool normalize = true;

  double driver(double s) const;   // A(s)
  double problem(double s) const;  // B(s)
  std::int64_t steps() const;
};

// Trotterized evolution under A(s) (-sum X) + B(s) H_F from the uniform
// superposition. `on_step` (optional) sees the state after every step,
// before the drift renormalization.
QuantumRun anneal_run(const IsingModel& ising, const AnnealSchedule& schedule,
                      int shots, std::uint64_t seed,
                      const std::function<void(const StateVector&)>& on_step = {});

}  // namespace qubofolio

#endif  // QUBOFOLIO_QUANTUM_H_
