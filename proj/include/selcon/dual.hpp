// Copyright 2026 The Authors.
//
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

// The Lagrangian of validation-constrained ridge regression on a training
// subset S,
//
//   F(w, mu, S) = sum_{i in S} [lambda ||w||^2 + (y_i - h_w(x_i))^2]
//               + sum_q mu_q [ mean_{j in V_q} (y_j - h_w(x_j))^2 - delta ],
//
// and the trainers that solve max_{0 <= mu <= C} min_w F(w, mu, S).

#ifndef SELCON_DUAL_HPP_
#define SELCON_DUAL_HPP_

#include <cstdint>
#include <string>

#include <Eigen/Dense>

#include "selcon/dataset.hpp"
#include "selcon/model.hpp"

namespace selcon {

enum class Backend { kExact, kSgd };

std::string ToString(Backend backend);
Backend ParseBackend(const std::string& s);

// The immutable inputs of one selection problem: the ground set D, the
// partitioned validation set and the two scalar weights.
struct Problem {
  Dataset train;
  Dataset val;
  ValidationPartition partition;
  double lambda = 1.0;
  double C = 1.0;

  std::size_t num_groups() const { return partition.num_groups(); }
  // Throws on lambda <= 0, C < 0, mismatched dimensions or a malformed
  // partition.
  void Validate() const;
};

struct TrainerConfig {
  int epochs = 2000;        // N
  int batch_size = 1000;    // b; batches hold min(|S|, b) elements
  double lr_w = 0.01;
  double lr_mu = 0.01;
  double mu_tol = 1e-10;    // projected-gradient norm that stops the exact backend
  int max_outer = 500;      // exact backend mu iterations
  std::uint64_t seed = 0;
  Eigen::Index hidden_width = kDefaultHiddenWidth;

  void Validate() const;
};

struct TrainedState {
  Model model;
  Eigen::VectorXd mu;
  double f_value = 0.0;
  int iterations = 0;
  Backend backend = Backend::kExact;
  // False when the exact backend stopped on max_outer before reaching
  // mu_tol; the state is still the best one found.
  bool converged = true;
};

// Mean squared validation error of each group V_q.
Eigen::VectorXd GroupErrors(const Model& model, const Dataset& val,
                            const ValidationPartition& partition);

double DualObjective(const Model& model, const Eigen::VectorXd& mu, const IndexSet& subset,
                     const Problem& problem);

// Exact minimiser of F(., mu, S) for the linear model:
//   w = (lambda |S| I + X_S'X_S + sum_q mu_q/|V_q| X_q'X_q)^{-1}
//       (X_S'y_S + sum_q mu_q/|V_q| X_q'y_q).
// With S empty and mu = 0 the system is zero; that case throws
// kSingularSystem unless `allow_degenerate`, in which case w = 0 (every w is
// a minimiser). For S empty and a rank-deficient validation Gram matrix the
// minimum-norm minimiser is returned.
LinearModel<double> SolveInnerLinear(const Eigen::VectorXd& mu, const IndexSet& subset,
                                     const Problem& problem, bool allow_degenerate = false);

// Projected ascent on mu with w re-solved in closed form at every step.
// Steps are projected Newton steps on the free coordinates with a backtracking
// line search; coordinates without curvature fall back to projected
// gradient steps.
TrainedState TrainDualExact(const IndexSet& subset, const Problem& problem,
                            const TrainerConfig& cfg);

// Alternating Adam steps on the parameters over mini-batches of S and
// projected gradient ascent steps on mu. Deterministic for a fixed seed.
TrainedState TrainDualSgd(const IndexSet& subset, const Problem& problem,
                          const TrainerConfig& cfg, ModelKind kind);

// Initial parameters used by TrainDualSgd (independent of S).
Model InitialModel(ModelKind kind, Eigen::Index dim, const TrainerConfig& cfg);

struct PrimalResult {
  double value = 0.0;
  Model model;
  int iterations = 0;
  bool converged = false;
};

// g(S) = min_w sum_{i in S}[lambda ||w||^2 + r_i^2] + C sum_q max(0, e_q(w) - delta)
// by subgradient descent (the optimal slack is substituted analytically).
// Runs until the best value improves by less than tol (relative) over a
// window of iterations, or max_iters. `start` seeds the iterate; its
// architecture fixes the model.
PrimalResult PrimalValue(const IndexSet& subset, const Problem& problem, const Model& start,
                         double tol = 1e-9, int max_iters = 2'000'000);

}  // namespace selcon

#endif  // SELCON_DUAL_HPP_
