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

#include "qubofolio/solvers.h"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <cmath>
#include <limits>
#include <mutex>
#include <queue>
#include <random>
#include <thread>

#include <Eigen/Dense>

#include "qubofolio/error.h"

namespace qubofolio {
namespace {

using Clock = std::chrono::steady_clock;
constexpr double kInf = std::numeric_limits<double>::infinity();

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

bool reaches(const std::optional<double>& target, double energy) {
  return target && energy <= *target + 1e-9 * std::max(1.0, std::abs(*target));
}

// Global best shared by all workers of one run. Updates apply only when
// strictly better, or equal in energy with a smaller hash, so the final
// result does not depend on the order workers report in.
class Incumbent {
 public:
  Incumbent(const SolveBudget& budget, Clock::time_point start)
      : budget_(budget), start_(start) {}

  void offer(const Assignment& bits, double energy) {
    if (!(energy <= snapshot_.load(std::memory_order_relaxed))) return;
    const std::uint64_t hash = bit_hash(bits);
    std::lock_guard<std::mutex> lock(mu_);
    const bool better = !has_ || energy < energy_;
    if (!better && !(energy == energy_ && hash < hash_)) return;
    if (better) trace_.emplace_back(seconds_since(start_), energy);
    has_ = true;
    energy_ = energy;
    hash_ = hash;
    bits_ = bits;
    snapshot_.store(energy, std::memory_order_relaxed);
    if (reaches(budget_.target_energy, energy)) stop_.store(true);
  }

  double best() const { return snapshot_.load(std::memory_order_relaxed); }
  bool stopped() const { return stop_.load(std::memory_order_relaxed); }
  void stop() { stop_.store(true); }
  bool out_of_time() {
    if (seconds_since(start_) >= budget_.time_limit) stop_.store(true);
    return stopped();
  }

  SolveReport finish(const BlockQubo& qubo, std::string name,
                     std::uint64_t iterations) {
    SolveReport report;
    report.solver = std::move(name);
    report.seed = budget_.seed;
    report.iterations = iterations;
    report.best = bits_;
    report.best_energy = energy(qubo, bits_);
    report.trace = trace_;
    if (!report.trace.empty()) {
      report.trace.back().second = report.best_energy;
      report.tts = report.trace.back().first;
    }
    return report;
  }

 private:
  const SolveBudget& budget_;
  Clock::time_point start_;
  std::mutex mu_;
  bool has_ = false;
  double energy_ = kInf;
  std::uint64_t hash_ = 0;
  Assignment bits_;
  std::vector<std::pair<double, double>> trace_;
  std::atomic<double> snapshot_{kInf};
  std::atomic<bool> stop_{false};
};

Assignment random_bits(std::int64_t n, std::mt19937_64& rng) {
  Assignment bits(n);
  for (auto& b : bits) b = static_cast<std::uint8_t>(rng() & 1);
  return bits;
}

// Splits an iteration quota across workers; 0 stays unlimited.
std::uint64_t worker_quota(const SolveBudget& budget, int worker) {
  if (budget.max_iterations == 0) return 0;
  const std::uint64_t w = budget.workers;
  return budget.max_iterations / w + (static_cast<std::uint64_t>(worker) <
                                              budget.max_iterations % w
                                          ? 1
                                          : 0);
}

template <typename Fn>
void run_workers(int workers, Fn&& fn) {
  if (workers == 1) {
    fn(0);
    return;
  }
  std::vector<std::jthread> threads;
  for (int w = 0; w < workers; ++w) threads.emplace_back([&fn, w] { fn(w); });
}

// ---------------------------------------------------------------------------
// Branch and bound
// ---------------------------------------------------------------------------

// y = M x where x^T M x is the off-diagonal quadratic part of the QUBO.
void quadratic_matvec(const BlockQubo& q, const std::vector<double>& x,
                      std::vector<double>& y) {
  const std::int64_t w = q.width;
  for (int t = 0; t < q.num_steps; ++t) {
    const std::int64_t base = t * w;
    for (std::int64_t i = 0; i < w; ++i) {
      const double* row = q.blocks[t].data() + i * w;
      double acc = 0.0;
      for (std::int64_t j = 0; j < w; ++j) {
        if (j != i) acc += row[j] * x[base + j];
      }
      if (t > 0) acc += 0.5 * q.cross[t - 1][i] * x[base + i - w];
      if (t + 1 < q.num_steps) acc += 0.5 * q.cross[t][i] * x[base + i + w];
      y[base + i] = acc;
    }
  }
}

struct Spectrum {
  double min = 0.0;
  double max = 0.0;
};

Spectrum quadratic_spectrum(const BlockQubo& q, const BnbOptions& options) {
  const std::int64_t n = q.num_vars();
  if (n == 0) return {};
  if (n <= options.dense_eigen_limit) {
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
    std::vector<double> e(n, 0.0), col(n);
    for (std::int64_t j = 0; j < n; ++j) {
      e[j] = 1.0;
      quadratic_matvec(q, e, col);
      e[j] = 0.0;
      for (std::int64_t i = 0; i < n; ++i) m(i, j) = col[i];
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m, Eigen::EigenvaluesOnly);
    const double scale = std::max(1.0, solver.eigenvalues().cwiseAbs().maxCoeff());
    return {solver.eigenvalues().minCoeff() - 1e-9 * scale,
            solver.eigenvalues().maxCoeff() + 1e-9 * scale};
  }
  // Power iteration: spectral radius first, then the top of (r I - M).
  std::mt19937_64 rng(12345);
  std::normal_distribution<double> normal;
  auto power = [&](double shift, double sign) {
    std::vector<double> v(n), mv(n);
    for (auto& a : v) a = normal(rng);
    double lambda = 0.0;
    for (int it = 0; it < 100; ++it) {
      double norm = 0.0;
      for (double a : v) norm += a * a;
      norm = std::sqrt(norm);
      if (norm == 0.0) return 0.0;
      for (auto& a : v) a /= norm;
      quadratic_matvec(q, v, mv);
      lambda = 0.0;
      for (std::int64_t i = 0; i < n; ++i) {
        mv[i] = shift * v[i] + sign * mv[i];
        lambda += v[i] * mv[i];
      }
      v.swap(mv);
    }
    return lambda;
  };
  const double radius = std::abs(power(0.0, 1.0));
  const double top_of_shifted = power(radius, -1.0);  // r - lambda_min
  const double lambda_min = radius - top_of_shifted;
  const double lambda_max = power(radius, 1.0) - radius;
  return {lambda_min < 0 ? 1.1 * lambda_min : 0.0,
          lambda_max > 0 ? 1.1 * lambda_max : 0.0};
}

struct Node {
  double bound = -kInf;
  std::uint64_t id = 0;
  std::vector<std::int8_t> fixed;  // -1 free, else the fixed value
  std::vector<double> start;       // warm start for the relaxation
};

struct NodeOrder {
  bool operator()(const Node& a, const Node& b) const {
    if (a.bound != b.bound) return a.bound > b.bound;
    return a.id > b.id;
  }
};

class BranchAndBound {
 public:
  BranchAndBound(const BlockQubo& q, const BnbOptions& options)
      : q_(q), options_(options), n_(q.num_vars()), grad_(n_), mx_(n_) {
    diag_.resize(n_);
    for (std::int64_t i = 0; i < n_; ++i) {
      diag_[i] = q.linear[i] + q.at(static_cast<int>(i / q.width), i % q.width,
                                    i % q.width);
    }
    const Spectrum s = quadratic_spectrum(q, options);
    shift_ = std::max(0.0, -s.min);
    lipschitz_ = 2.0 * (s.max + shift_);
  }

  // Minimizes the shifted relaxation over the free box starting from x and
  // returns a valid lower bound from the linearization at the final point.
  double relax(const std::vector<std::int8_t>& fixed, std::vector<double>& x) {
    for (std::int64_t i = 0; i < n_; ++i) {
      if (fixed[i] >= 0) x[i] = fixed[i];
    }
    const double step =
        lipschitz_ > 0.0 ? 1.0 / lipschitz_ : std::numeric_limits<double>::max();
    for (int it = 0; it < options_.gradient_iterations; ++it) {
      gradient(fixed, x);
      bool moved = false;
      for (std::int64_t i = 0; i < n_; ++i) {
        if (fixed[i] >= 0) continue;
        const double next = std::clamp(x[i] - step * grad_[i], 0.0, 1.0);
        moved |= next != x[i];
        x[i] = next;
      }
      if (!moved) break;
    }
    gradient(fixed, x);
    long double value = q_.offset;
    for (std::int64_t i = 0; i < n_; ++i) {
      value += diag_[i] * x[i] + mx_[i] * x[i];
      if (fixed[i] < 0) {
        value += shift_ * (x[i] * x[i] - x[i]);
        const double g = grad_[i];
        value += g < 0 ? g * (1.0 - x[i]) : -g * x[i];
      }
    }
    return static_cast<double>(value);
  }

 private:
  void gradient(const std::vector<std::int8_t>& fixed, const std::vector<double>& x) {
    quadratic_matvec(q_, x, mx_);
    for (std::int64_t i = 0; i < n_; ++i) {
      grad_[i] = fixed[i] >= 0 ? 0.0
                               : diag_[i] + 2.0 * mx_[i] + shift_ * (2.0 * x[i] - 1.0);
    }
  }

  const BlockQubo& q_;
  const BnbOptions& options_;
  std::int64_t n_;
  std::vector<double> diag_, grad_, mx_;
  double shift_ = 0.0;
  double lipschitz_ = 0.0;
};

// ---------------------------------------------------------------------------
// Pooled search helpers
// ---------------------------------------------------------------------------

std::uint64_t tabu_search(FlipState& state, int steps, int tenure,
                          const Incumbent& global) {
  const std::int64_t n = state.size();
  std::vector<std::int64_t> tabu_until(n, -1);
  Assignment best = state.bits();
  double best_energy = state.energy();
  std::uint64_t flips = 0;
  for (int step = 0; step < steps; ++step) {
    if ((step & 63) == 0 && global.stopped()) break;
    std::int64_t pick = -1;
    double pick_delta = kInf;
    for (std::int64_t i = 0; i < n; ++i) {
      const double d = state.delta(i);
      const bool allowed =
          tabu_until[i] < step || state.energy() + d < best_energy;
      if (allowed && d < pick_delta) {
        pick = i;
        pick_delta = d;
      }
    }
    if (pick < 0) break;
    state.flip(pick);
    ++flips;
    tabu_until[pick] = step + tenure;
    if (state.energy() < best_energy) {
      best_energy = state.energy();
      best = state.bits();
    }
  }
  state.reset(std::move(best));
  return flips;
}

}  // namespace

void SolveBudget::validate() const {
  if (!(time_limit > 0.0)) fail(ErrorCode::kSpec, "time_limit must be > 0");
  if (workers < 1) fail(ErrorCode::kSpec, "workers must be >= 1");
}

void PoolConfig::validate() const {
  if (pool_size < 1) fail(ErrorCode::kSpec, "pool_size must be >= 1");
  if (crossover && pool_size < 2) {
    fail(ErrorCode::kSpec, "pool_size must be >= 2 with crossover enabled");
  }
  if (!(restart || tabu || crossover || mutation)) {
    fail(ErrorCode::kSpec, "at least one pool operator must be enabled");
  }
  if (!(adaptation_halflife > 0.0)) {
    fail(ErrorCode::kSpec, "adaptation_halflife must be > 0");
  }
  if (!(mutation_mean >= 1.0)) fail(ErrorCode::kSpec, "mutation_mean must be >= 1");
}

std::uint64_t bit_hash(const Assignment& bits) {
  std::uint64_t h = 14695981039346656037ULL;
  for (std::uint8_t b : bits) {
    h ^= b;
    h *= 1099511628211ULL;
  }
  return h;
}

bool SolutionPool::offer(Assignment bits, double energy) {
  const std::uint64_t hash = bit_hash(bits);
  if (dedupe_) {
    for (const auto& m : members_) {
      if (m.hash == hash) return false;
    }
  }
  auto less = [](const Member& a, double e, std::uint64_t h) {
    return a.energy < e || (a.energy == e && a.hash < h);
  };
  if (full() && less(members_.back(), energy, hash)) return false;
  auto pos = std::find_if(members_.begin(), members_.end(), [&](const Member& m) {
    return !less(m, energy, hash);
  });
  members_.insert(pos, Member{std::move(bits), energy, hash});
  if (size() > capacity_) members_.pop_back();
  return true;
}

double SolutionPool::worst_energy() const {
  return members_.empty() ? kInf : members_.back().energy;
}

std::uint64_t local_descent(FlipState& state) {
  const std::int64_t n = state.size();
  const std::uint64_t guard = 100 * static_cast<std::uint64_t>(n) + 1000;
  std::uint64_t flips = 0;
  while (flips < guard) {
    std::int64_t pick = -1;
    double pick_delta = 0.0;
    for (std::int64_t i = 0; i < n; ++i) {
      const double d = state.delta(i);
      if (d < pick_delta) {
        pick = i;
        pick_delta = d;
      }
    }
    if (pick < 0) break;
    state.flip(pick);
    ++flips;
  }
  return flips;
}

Assignment local_descent(const BlockQubo& qubo, Assignment bits) {
  FlipState state(qubo, std::move(bits));
  local_descent(state);
  return state.bits();
}

SolveReport solve_exact(const BlockQubo& qubo, const SolveBudget& budget) {
  budget.validate();
  const std::int64_t n = qubo.num_vars();
  if (n > kExactMaxVars) {
    fail(ErrorCode::kSizeCap, "exact solver supports at most " +
                                  std::to_string(kExactMaxVars) +
                                  " variables, got " + std::to_string(n));
  }
  const auto start = Clock::now();
  Incumbent incumbent(budget, start);
  FlipState state(qubo, Assignment(n, 0));
  incumbent.offer(state.bits(), energy(qubo, state.bits()));
  double best = state.energy();
  const std::uint64_t count = 1ULL << n;
  std::uint64_t k = 1;
  bool complete = true;
  for (; k < count; ++k) {
    state.flip(std::countr_zero(k));
    if (state.energy() < best) {
      best = state.energy();
      incumbent.offer(state.bits(), energy(qubo, state.bits()));
    }
    if ((k & 0xFFFF) == 0 && incumbent.out_of_time()) {
      complete = false;
      ++k;
      break;
    }
  }
  SolveReport report = incumbent.finish(qubo, "exact", k);
  if (complete) report.lower_bound = report.best_energy;
  return report;
}

SolveReport solve_bnb(const BlockQubo& qubo, const SolveBudget& budget,
                      const BnbOptions& options) {
  budget.validate();
  const auto start = Clock::now();
  const std::int64_t n = qubo.num_vars();
  Incumbent incumbent(budget, start);
  BranchAndBound bnb(qubo, options);

  std::priority_queue<Node, std::vector<Node>, NodeOrder> open;
  std::uint64_t next_id = 0;
  open.push(Node{-kInf, next_id++, std::vector<std::int8_t>(n, -1),
                 std::vector<double>(n, 0.5)});
  incumbent.offer(Assignment(n, 0), energy(qubo, Assignment(n, 0)));

  std::uint64_t nodes = 0;
  double unresolved = kInf;  // bound of a node abandoned at budget expiry
  while (!open.empty()) {
    if (incumbent.out_of_time() ||
        (budget.max_iterations && nodes >= budget.max_iterations)) {
      break;
    }
    Node node = open.top();
    open.pop();
    ++nodes;
    const double inc = incumbent.best();
    const double tol = 1e-12 * std::max(1.0, std::abs(inc));
    if (node.bound >= inc - tol) continue;

    std::vector<double> x = std::move(node.start);
    const double bound = std::max(node.bound, bnb.relax(node.fixed, x));
    if (bound >= incumbent.best() - tol) continue;

    Assignment rounded(n);
    for (std::int64_t i = 0; i < n; ++i) {
      rounded[i] = node.fixed[i] >= 0 ? node.fixed[i] : (x[i] >= 0.5 ? 1 : 0);
    }
    FlipState state(qubo, rounded);
    if (state.energy() < incumbent.best()) {
      incumbent.offer(state.bits(), energy(qubo, state.bits()));
    }
    local_descent(state);
    if (state.energy() < incumbent.best()) {
      incumbent.offer(state.bits(), energy(qubo, state.bits()));
    }
    if (incumbent.stopped()) {
      unresolved = bound;
      break;
    }
    if (bound >= incumbent.best() - tol) continue;

    std::int64_t branch = -1;
    double closest = kInf;
    for (std::int64_t i = 0; i < n; ++i) {
      if (node.fixed[i] >= 0) continue;
      const double d = std::abs(x[i] - 0.5);
      if (d < closest) {
        closest = d;
        branch = i;
      }
    }
    if (branch < 0) continue;  // leaf: bound is the exact energy
    for (std::int8_t value : {std::int8_t{0}, std::int8_t{1}}) {
      Node child{bound, next_id++, node.fixed, x};
      child.fixed[branch] = value;
      open.push(std::move(child));
    }
  }

  SolveReport report = incumbent.finish(qubo, "bnb", nodes);
  double lb = std::min(report.best_energy, unresolved);
  if (!open.empty()) lb = std::min(lb, open.top().bound);
  report.lower_bound = lb;
  return report;
}

SolveReport solve_sa(const BlockQubo& qubo, const SolveBudget& budget,
                     const AnnealingSchedule& schedule) {
  budget.validate();
  const auto start = Clock::now();
  const std::int64_t n = qubo.num_vars();
  Incumbent incumbent(budget, start);
  std::atomic<std::uint64_t> restarts{0};

  run_workers(budget.workers, [&](int worker) {
    std::mt19937_64 rng(budget.seed ^ static_cast<std::uint64_t>(worker));
    std::uniform_real_distribution<double> uniform(0.0, 1.0);
    std::uniform_int_distribution<std::int64_t> pick(0, std::max<std::int64_t>(n - 1, 0));

    FlipState state(qubo, random_bits(n, rng));
    double t0 = schedule.initial_temperature;
    if (t0 <= 0.0) {
      std::vector<double> mags;
      for (double d : state.deltas()) {
        if (d != 0.0) mags.push_back(std::abs(d));
      }
      if (mags.empty()) {
        t0 = 1.0;
      } else {
        const std::size_t k = static_cast<std::size_t>(0.9 * (mags.size() - 1));
        std::nth_element(mags.begin(), mags.begin() + k, mags.end());
        t0 = mags[k];
      }
    }
    const std::uint64_t sweeps = std::max<std::uint64_t>(schedule.sweeps, 1);
    const double cooling =
        sweeps > 1 ? std::pow(schedule.final_ratio, 1.0 / (sweeps - 1)) : 1.0;
    const std::uint64_t quota = worker_quota(budget, worker);

    for (std::uint64_t run = 0; quota == 0 || run < quota; ++run) {
      if (incumbent.out_of_time()) break;
      if (run > 0) state.reset(random_bits(n, rng));
      incumbent.offer(state.bits(), state.energy());
      double temperature = t0;
      for (std::uint64_t sweep = 0; sweep < sweeps && n > 0; ++sweep) {
        for (std::int64_t s = 0; s < n; ++s) {
          const std::int64_t i = pick(rng);
          const double d = state.delta(i);
          if (d <= 0.0 || uniform(rng) < std::exp(-d / temperature)) {
            state.flip(i);
            if (state.energy() < incumbent.best()) {
              incumbent.offer(state.bits(), state.energy());
            }
          }
        }
        temperature *= cooling;
        if ((sweep & 15) == 0 && incumbent.out_of_time()) break;
      }
      restarts.fetch_add(1);
      if (incumbent.stopped()) break;
    }
  });
  return incumbent.finish(qubo, "sa", restarts.load());
}

SolveReport solve_abs(const BlockQubo& qubo, const SolveBudget& budget,
                      const PoolConfig& config) {
  budget.validate();
  config.validate();
  const auto start = Clock::now();
  const std::int64_t n = qubo.num_vars();
  Incumbent incumbent(budget, start);
  std::atomic<std::uint64_t> applications{0};

  const int tenure = config.tabu_tenure > 0
                         ? config.tabu_tenure
                         : static_cast<int>(std::ceil(std::sqrt(static_cast<double>(n))));
  const int tabu_steps = config.tabu_steps > 0
                             ? config.tabu_steps
                             : static_cast<int>(std::clamp<std::int64_t>(n, 32, 2000));
  const double decay = std::pow(0.5, 1.0 / config.adaptation_halflife);
  const bool enabled[kNumPoolOperators] = {config.restart, config.tabu,
                                           config.crossover, config.mutation};

  run_workers(budget.workers, [&](int worker) {
    std::mt19937_64 rng(budget.seed ^ static_cast<std::uint64_t>(worker));
    std::uniform_real_distribution<double> uniform(0.0, 1.0);
    std::geometric_distribution<int> extra_bits(1.0 / config.mutation_mean);
    SolutionPool pool(config.pool_size, config.dedupe);
    FlipState state(qubo, Assignment(n, 0));
    double scores[kNumPoolOperators] = {0.0, 0.0, 0.0, 0.0};
    const std::uint64_t quota = worker_quota(budget, worker);

    auto submit = [&](double reference) {
      const double e = state.energy();
      pool.offer(state.bits(), e);
      if (e < incumbent.best()) incumbent.offer(state.bits(), energy(qubo, state.bits()));
      return std::max(0.0, reference - e);
    };

    // Seed the pool with two independent descents so crossover has parents.
    for (int s = 0; s < std::min(2, config.pool_size); ++s) {
      state.reset(random_bits(n, rng));
      local_descent(state);
      submit(kInf);
    }

    for (std::uint64_t it = 0; quota == 0 || it < quota; ++it) {
      if (incumbent.out_of_time()) break;

      double weights[kNumPoolOperators];
      double top = 0.0;
      for (double s : scores) top = std::max(top, s);
      double total = 0.0;
      for (int op = 0; op < kNumPoolOperators; ++op) {
        bool usable = enabled[op];
        if (op == static_cast<int>(PoolOperator::kCrossover)) usable &= pool.size() >= 2;
        if (op != static_cast<int>(PoolOperator::kRestart)) usable &= pool.size() >= 1;
        weights[op] = usable ? std::exp(top > 0.0 ? scores[op] / top : 0.0) : 0.0;
        total += weights[op];
      }
      if (total == 0.0) {
        weights[static_cast<int>(PoolOperator::kRestart)] = 1.0;
        total = 1.0;
      }
      double r = uniform(rng) * total;
      int op = -1;
      for (int candidate = 0; candidate < kNumPoolOperators; ++candidate) {
        if (weights[candidate] == 0.0) continue;
        op = candidate;
        if (r < weights[candidate]) break;
        r -= weights[candidate];
      }

      const auto& members = pool.members();
      std::uniform_int_distribution<int> member(0, std::max(pool.size() - 1, 0));
      std::uint64_t work = 1;
      switch (static_cast<PoolOperator>(op)) {
        case PoolOperator::kRestart:
          state.reset(random_bits(n, rng));
          break;
        case PoolOperator::kTabu:
          state.reset(members[member(rng)].bits);
          work += tabu_search(state, tabu_steps, tenure, incumbent);
          break;
        case PoolOperator::kCrossover: {
          const int a = member(rng);
          int b = member(rng);
          while (b == a) b = member(rng);
          Assignment child(n);
          for (std::int64_t i = 0; i < n; ++i) {
            child[i] = (rng() & 1) ? members[a].bits[i] : members[b].bits[i];
          }
          state.reset(std::move(child));
          break;
        }
        case PoolOperator::kMutation: {
          state.reset(members[member(rng)].bits);
          const int flips = 1 + extra_bits(rng);
          std::uniform_int_distribution<std::int64_t> var(0, std::max<std::int64_t>(n - 1, 0));
          for (int f = 0; f < flips && n > 0; ++f) state.flip(var(rng));
          work += flips;
          break;
        }
      }
      work += local_descent(state);
      const double gain = submit(pool.worst_energy());
      scores[op] = decay * scores[op] + (1.0 - decay) * gain / static_cast<double>(work);
      applications.fetch_add(1);
    }
  });
  return incumbent.finish(qubo, "abs", applications.load());
}

SolveReport solve(const std::string& solver, const BlockQubo& qubo,
                  const SolveBudget& budget) {
  if (solver == "exact") return solve_exact(qubo, budget);
  if (solver == "bnb") return solve_bnb(qubo, budget);
  if (solver == "sa") return solve_sa(qubo, budget);
  if (solver == "abs") return solve_abs(qubo, budget);
  fail(ErrorCode::kSpec, "unknown solver '" + solver + "'");
}

}  // namespace qubofolio
