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

#include "selcon/dual.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <random>

#include "selcon/error.hpp"

namespace selcon {

std::string ToString(Backend backend) { return backend == Backend::kExact ? "exact" : "sgd"; }

Backend ParseBackend(const std::string& s) {
  if (s == "exact") return Backend::kExact;
  if (s == "sgd") return Backend::kSgd;
  throw Error(ErrorCode::kInvalidArgument, "unknown backend '" + s + "'");
}

void Problem::Validate() const {
  if (!(lambda > 0.0) || !std::isfinite(lambda)) {
    throw Error(ErrorCode::kInvalidArgument, "lambda must be > 0");
  }
  if (!(C >= 0.0) || !std::isfinite(C)) throw Error(ErrorCode::kInvalidArgument, "C must be >= 0");
  if (train.dim() != val.dim()) {
    throw Error(ErrorCode::kDimensionMismatch, "train and validation feature counts differ");
  }
  if (std::isnan(partition.delta) || partition.delta < 0.0) {
    throw Error(ErrorCode::kInvalidArgument, "delta must be >= 0");
  }
  if (partition.subsets.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "validation partition needs Q >= 1");
  }
  std::vector<bool> seen(val.size(), false);
  std::size_t covered = 0;
  for (const auto& subset : partition.subsets) {
    if (subset.empty()) throw Error(ErrorCode::kInvalidArgument, "empty validation group");
    for (std::size_t j : subset) {
      if (j >= val.size() || seen[j]) {
        throw Error(ErrorCode::kInvalidArgument, "validation partition is not a partition");
      }
      seen[j] = true;
      ++covered;
    }
  }
  if (covered != val.size()) {
    throw Error(ErrorCode::kInvalidArgument, "validation partition does not cover V");
  }
}

void TrainerConfig::Validate() const {
  if (epochs <= 0 || batch_size < 1 || !(lr_w > 0.0) || !(lr_mu > 0.0) || !(mu_tol > 0.0) ||
      max_outer <= 0 || hidden_width <= 0) {
    throw Error(ErrorCode::kInvalidArgument, "trainer settings must be positive");
  }
}

Eigen::VectorXd GroupErrors(const Model& model, const Dataset& val,
                            const ValidationPartition& partition) {
  Eigen::VectorXd errors(static_cast<Eigen::Index>(partition.num_groups()));
  for (std::size_t q = 0; q < partition.num_groups(); ++q) {
    double sum = 0.0;
    for (std::size_t j : partition.subsets[q]) {
      const auto row = static_cast<Eigen::Index>(j);
      const double r = val.targets(row) - Predict(model, val.features.row(row).transpose());
      sum += r * r;
    }
    errors(static_cast<Eigen::Index>(q)) = sum / static_cast<double>(partition.subsets[q].size());
  }
  return errors;
}

double DualObjective(const Model& model, const Eigen::VectorXd& mu, const IndexSet& subset,
                     const Problem& problem) {
  internal::CheckDim(static_cast<Eigen::Index>(problem.num_groups()), mu.size());
  const double reg = problem.lambda * SquaredNorm(model);
  double train_term = 0.0;
  for (std::size_t i : subset) {
    const auto row = static_cast<Eigen::Index>(i);
    const double r =
        problem.train.targets(row) - Predict(model, problem.train.features.row(row).transpose());
    train_term += reg + r * r;
  }
  const Eigen::VectorXd errors = GroupErrors(model, problem.val, problem.partition);
  double constraint_term = 0.0;
  for (Eigen::Index q = 0; q < mu.size(); ++q) {
    // Skipped at mu_q = 0 so that delta = +inf is allowed.
    if (mu(q) != 0.0) constraint_term += mu(q) * (errors(q) - problem.partition.delta);
  }
  return train_term + constraint_term;
}

namespace {

// The mu-independent pieces of the normal equations for the linear model.
class LinearSystem {
 public:
  LinearSystem(const IndexSet& subset, const Problem& problem)
      : problem_(problem), subset_size_(subset.size()) {
    const Eigen::Index d = static_cast<Eigen::Index>(problem.train.dim());
    base_matrix_ = Eigen::MatrixXd::Identity(d, d) *
                   (problem.lambda * static_cast<double>(subset.size()));
    base_rhs_ = Eigen::VectorXd::Zero(d);
    for (std::size_t i : subset) {
      const auto x = problem.train.features.row(static_cast<Eigen::Index>(i)).transpose();
      base_matrix_.noalias() += x * x.transpose();
      base_rhs_.noalias() += problem.train.targets(static_cast<Eigen::Index>(i)) * x;
    }
    for (const auto& group : problem.partition.subsets) {
      Eigen::MatrixXd gram = Eigen::MatrixXd::Zero(d, d);
      Eigen::VectorXd rhs = Eigen::VectorXd::Zero(d);
      for (std::size_t j : group) {
        const auto x = problem.val.features.row(static_cast<Eigen::Index>(j)).transpose();
        gram.noalias() += x * x.transpose();
        rhs.noalias() += problem.val.targets(static_cast<Eigen::Index>(j)) * x;
      }
      const double inv = 1.0 / static_cast<double>(group.size());
      group_gram_.push_back(gram * inv);
      group_rhs_.push_back(rhs * inv);
    }
  }

  struct Solution {
    Eigen::VectorXd w;
    Eigen::MatrixXd matrix;  // the system matrix A(mu)
    bool definite = true;
  };

  Solution Solve(const Eigen::VectorXd& mu) const {
    Solution s;
    s.matrix = base_matrix_;
    Eigen::VectorXd rhs = base_rhs_;
    for (std::size_t q = 0; q < group_gram_.size(); ++q) {
      const double m = mu(static_cast<Eigen::Index>(q));
      s.matrix.noalias() += m * group_gram_[q];
      rhs.noalias() += m * group_rhs_[q];
    }
    if (subset_size_ > 0) {
      Eigen::LLT<Eigen::MatrixXd> llt(s.matrix);
      if (llt.info() == Eigen::Success) {
        s.w = llt.solve(rhs);
        return s;
      }
    }
    s.definite = false;
    s.w = s.matrix.completeOrthogonalDecomposition().solve(rhs);
    return s;
  }

  // Rows are grad_w e_q(w) = 2 (M_q w - r_q).
  Eigen::MatrixXd ErrorGradients(const Eigen::VectorXd& w) const {
    Eigen::MatrixXd g(static_cast<Eigen::Index>(group_gram_.size()), w.size());
    for (std::size_t q = 0; q < group_gram_.size(); ++q) {
      g.row(static_cast<Eigen::Index>(q)) = (2.0 * (group_gram_[q] * w - group_rhs_[q])).transpose();
    }
    return g;
  }

  const Problem& problem() const { return problem_; }

 private:
  const Problem& problem_;
  std::size_t subset_size_;
  Eigen::MatrixXd base_matrix_;
  Eigen::VectorXd base_rhs_;
  std::vector<Eigen::MatrixXd> group_gram_;
  std::vector<Eigen::VectorXd> group_rhs_;
};

struct DualPoint {
  Eigen::VectorXd mu;
  LinearSystem::Solution solution;
  double value = 0.0;
  Eigen::VectorXd grad;  // e_q(w*(mu)) - delta
};

DualPoint Evaluate(const LinearSystem& system, const IndexSet& subset, Eigen::VectorXd mu) {
  DualPoint p;
  p.solution = system.Solve(mu);
  const Model model = LinearModel<double>(p.solution.w);
  const Problem& problem = system.problem();
  p.grad = GroupErrors(model, problem.val, problem.partition).array() - problem.partition.delta;
  p.value = DualObjective(model, mu, subset, problem);
  p.mu = std::move(mu);
  return p;
}

Eigen::VectorXd ProjectedGradient(const Eigen::VectorXd& mu, const Eigen::VectorXd& grad,
                                  double cap) {
  Eigen::VectorXd pg = grad;
  for (Eigen::Index q = 0; q < mu.size(); ++q) {
    if ((mu(q) <= 0.0 && grad(q) < 0.0) || (mu(q) >= cap && grad(q) > 0.0)) pg(q) = 0.0;
  }
  return pg;
}

// By concavity, max over the box minus the current value is at most
// C ||pg||_1.
double DualGapBound(const Eigen::VectorXd& pg, double cap) { return cap * pg.lpNorm<1>(); }

Eigen::VectorXd Clamp(const Eigen::VectorXd& mu, double cap) {
  return mu.cwiseMax(0.0).cwiseMin(cap);
}

std::vector<Eigen::Index> FreeSet(const Eigen::VectorXd& pg) {
  std::vector<Eigen::Index> free;
  for (Eigen::Index q = 0; q < pg.size(); ++q) {
    if (pg(q) != 0.0) free.push_back(q);
  }
  return free;
}

// Newton direction on the free coordinates, or nothing when the curvature
// there is (numerically) singular. Coordinates on a face of the box whose
// Newton component points outwards are fixed and the step is recomputed.
std::optional<Eigen::VectorXd> NewtonDirection(const LinearSystem& system, const DualPoint& point,
                                               const Eigen::VectorXd& pg, double cap) {
  std::vector<Eigen::Index> free = FreeSet(pg);
  // The Hessian of the dual function is -G H^{-1} G' with H = 2 A(mu).
  const Eigen::MatrixXd g = system.ErrorGradients(point.solution.w);
  const Eigen::MatrixXd h = 2.0 * point.solution.matrix;
  const Eigen::MatrixXd h_inv_gt =
      point.solution.definite
          ? Eigen::MatrixXd(h.llt().solve(g.transpose()))
          : Eigen::MatrixXd(h.completeOrthogonalDecomposition().solve(g.transpose()));
  const Eigen::MatrixXd curvature = g * h_inv_gt;

  while (!free.empty()) {
    const auto nf = static_cast<Eigen::Index>(free.size());
    Eigen::MatrixXd sub(nf, nf);
    Eigen::VectorXd grad_free(nf);
    for (Eigen::Index r = 0; r < nf; ++r) {
      grad_free(r) = pg(free[static_cast<std::size_t>(r)]);
      for (Eigen::Index c = 0; c < nf; ++c) {
        sub(r, c) = curvature(free[static_cast<std::size_t>(r)], free[static_cast<std::size_t>(c)]);
      }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(sub);
    if (eig.info() != Eigen::Success) return std::nullopt;
    const double top = eig.eigenvalues().maxCoeff();
    const double bottom = eig.eigenvalues().minCoeff();
    if (!(top > 0.0) || !(bottom > 1e-12 * top)) return std::nullopt;
    const Eigen::VectorXd newton = sub.llt().solve(grad_free);

    std::vector<Eigen::Index> kept;
    for (Eigen::Index r = 0; r < nf; ++r) {
      const Eigen::Index q = free[static_cast<std::size_t>(r)];
      const bool outwards =
          (point.mu(q) <= 0.0 && newton(r) < 0.0) || (point.mu(q) >= cap && newton(r) > 0.0);
      if (!outwards) kept.push_back(q);
    }
    if (kept.size() == free.size()) {
      Eigen::VectorXd direction = Eigen::VectorXd::Zero(pg.size());
      for (Eigen::Index r = 0; r < nf; ++r) direction(free[static_cast<std::size_t>(r)]) = newton(r);
      return direction;
    }
    free = std::move(kept);
  }
  return std::nullopt;
}

// Backtracking from `step` along `direction` with projection onto the box.
std::optional<DualPoint> LineSearch(const LinearSystem& system, const IndexSet& subset,
                                    const DualPoint& current, const Eigen::VectorXd& direction,
                                    double step, double cap, double pg_norm) {
  for (int halving = 0; halving < 80; ++halving, step *= 0.5) {
    DualPoint trial = Evaluate(system, subset, Clamp(current.mu + step * direction, cap));
    const double gain = trial.value - current.value;
    const double predicted = current.grad.dot(trial.mu - current.mu);
    const double trial_pg = ProjectedGradient(trial.mu, trial.grad, cap).norm();
    // Near the optimum the value change drowns in rounding; a smaller
    // projected gradient at a value that did not drop is then accepted.
    const double slack = 1e-14 * (1.0 + std::abs(current.value));
    if ((gain > slack && gain >= 1e-4 * predicted) || (trial_pg < pg_norm && gain >= -slack)) {
      return trial;
    }
  }
  return std::nullopt;
}

}  // namespace

LinearModel<double> SolveInnerLinear(const Eigen::VectorXd& mu, const IndexSet& subset,
                                     const Problem& problem, bool allow_degenerate) {
  internal::CheckDim(static_cast<Eigen::Index>(problem.num_groups()), mu.size());
  if (subset.empty() && (mu.array() <= 0.0).all()) {
    if (!allow_degenerate) {
      throw Error(ErrorCode::kSingularSystem, "empty subset with mu = 0");
    }
    return LinearModel<double>::Zero(static_cast<Eigen::Index>(problem.train.dim()));
  }
  const LinearSystem system(subset, problem);
  return LinearModel<double>(system.Solve(mu).w);
}

TrainedState TrainDualExact(const IndexSet& subset, const Problem& problem,
                            const TrainerConfig& cfg) {
  cfg.Validate();
  const auto q_count = static_cast<Eigen::Index>(problem.num_groups());
  const double cap = problem.C;
  const LinearSystem system(subset, problem);

  // Empty subsets start at the top corner: there the dual function is
  // positively homogeneous in mu and has no curvature at the origin.
  Eigen::VectorXd mu0 = subset.empty() ? Eigen::VectorXd::Constant(q_count, cap)
                                       : Eigen::VectorXd::Zero(q_count);
  DualPoint current = Evaluate(system, subset, std::move(mu0));

  TrainedState state;
  state.backend = Backend::kExact;
  state.converged = false;
  int iter = 0;
  bool stalled = false;
  for (; iter < cfg.max_outer; ++iter) {
    const Eigen::VectorXd pg = ProjectedGradient(current.mu, current.grad, cap);
    const double pg_norm = pg.norm();
    if (pg_norm <= cfg.mu_tol || DualGapBound(pg, cap) <= 1e-12 * std::max(1.0, std::abs(current.value))) {
      state.converged = true;
      break;
    }
    // Both a Newton step and a box-crossing gradient step are tried; the
    // latter reaches the faces of the box in one move.
    std::optional<DualPoint> best;
    if (auto newton = NewtonDirection(system, current, pg, cap)) {
      best = LineSearch(system, subset, current, *newton, 1.0, cap, pg_norm);
    }
    const double crossing = std::max(cap, 1.0) / pg.cwiseAbs().maxCoeff();
    if (auto grad = LineSearch(system, subset, current, pg, crossing, cap, pg_norm)) {
      const double slack = 1e-14 * (1.0 + std::abs(current.value));
      if (!best || grad->value > best->value + slack) best = std::move(grad);
    }
    if (!best) {
      stalled = true;
      break;
    }
    current = std::move(*best);
    if (subset.empty() && current.mu.cwiseAbs().maxCoeff() <= 1e-9 * cap) break;
  }

  // With S empty the dual function is positively homogeneous and
  // non-differentiable at mu = 0, where it is 0. Iterates collapsing onto the
  // origin, or any negative value, mean the maximum is that corner.
  if (subset.empty() && (current.value < 0.0 || current.mu.cwiseAbs().maxCoeff() <= 1e-9 * cap)) {
    current.mu.setZero();
    current.solution.w = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(problem.train.dim()));
    current.value = 0.0;
    state.converged = true;
  }

  state.iterations = iter;
  state.mu = current.mu;
  state.model = LinearModel<double>(current.solution.w);
  state.f_value = current.value;
  if (!state.converged) {
    const Eigen::VectorXd pg = ProjectedGradient(current.mu, current.grad, cap);
    const double scale = std::max(1.0, std::abs(current.value));
    // A stall means no trial point improves at working precision.
    state.converged = pg.norm() <= cfg.mu_tol || DualGapBound(pg, cap) <= 1e-12 * scale ||
                      (stalled && DualGapBound(pg, cap) <= 1e-8 * scale);
  }
  return state;
}

Model InitialModel(ModelKind kind, Eigen::Index dim, const TrainerConfig& cfg) {
  if (kind == ModelKind::kLinear) return LinearModel<double>::Zero(dim);
  // Uniform(-1/sqrt(fan_in), 1/sqrt(fan_in)) for both layers.
  std::mt19937_64 rng(cfg.seed);
  const Eigen::Index width = cfg.hidden_width;
  std::uniform_real_distribution<double> first(-1.0 / std::sqrt(static_cast<double>(dim)),
                                               1.0 / std::sqrt(static_cast<double>(dim)));
  std::uniform_real_distribution<double> second(-1.0 / std::sqrt(static_cast<double>(width)),
                                                1.0 / std::sqrt(static_cast<double>(width)));
  Eigen::MatrixXd hidden(width, dim);
  for (Eigen::Index r = 0; r < width; ++r) {
    for (Eigen::Index c = 0; c < dim; ++c) hidden(r, c) = first(rng);
  }
  Eigen::VectorXd output(width);
  for (auto& v : output) v = second(rng);
  return TwoLayerModel<double>(std::move(hidden), std::move(output));
}

namespace {

// sum_q weight_q * mean_{j in V_q} grad (y_j - h(x_j))^2
Eigen::VectorXd WeightedValidationGrad(const Model& model, const Problem& problem,
                                       const Eigen::VectorXd& weights) {
  Eigen::VectorXd grad = Eigen::VectorXd::Zero(Params(model).size());
  for (std::size_t q = 0; q < problem.num_groups(); ++q) {
    const double w = weights(static_cast<Eigen::Index>(q));
    if (w == 0.0) continue;
    const auto& group = problem.partition.subsets[q];
    const double scale = w / static_cast<double>(group.size());
    for (std::size_t j : group) {
      const auto row = static_cast<Eigen::Index>(j);
      grad.noalias() +=
          scale * LossGrad(model, problem.val.features.row(row).transpose(), problem.val.targets(row));
    }
  }
  return grad;
}

class Adam {
 public:
  explicit Adam(Eigen::Index size, double lr)
      : lr_(lr), m_(Eigen::VectorXd::Zero(size)), v_(Eigen::VectorXd::Zero(size)) {}

  void Step(Eigen::VectorXd& params, const Eigen::VectorXd& grad) {
    constexpr double kBeta1 = 0.9;
    constexpr double kBeta2 = 0.999;
    constexpr double kEps = 1e-8;
    ++t_;
    m_ = kBeta1 * m_ + (1.0 - kBeta1) * grad;
    v_ = kBeta2 * v_ + (1.0 - kBeta2) * grad.cwiseAbs2();
    const double c1 = 1.0 - std::pow(kBeta1, t_);
    const double c2 = 1.0 - std::pow(kBeta2, t_);
    params.array() -= lr_ * (m_.array() / c1) / ((v_.array() / c2).sqrt() + kEps);
  }

 private:
  double lr_;
  Eigen::VectorXd m_;
  Eigen::VectorXd v_;
  int t_ = 0;
};

}  // namespace

TrainedState TrainDualSgd(const IndexSet& subset, const Problem& problem,
                          const TrainerConfig& cfg, ModelKind kind) {
  cfg.Validate();
  const auto dim = static_cast<Eigen::Index>(problem.train.dim());
  const auto q_count = static_cast<Eigen::Index>(problem.num_groups());
  const Model init = InitialModel(kind, dim, cfg);
  Eigen::VectorXd params = Params(init);
  Eigen::VectorXd mu = Eigen::VectorXd::Zero(q_count);
  Adam adam(params.size(), cfg.lr_w);

  IndexSet order = subset;
  std::mt19937_64 rng(cfg.seed ^ 0xd1b54a32d192ed03ULL);
  const std::size_t batch =
      subset.empty() ? 1 : std::min(subset.size(), static_cast<std::size_t>(cfg.batch_size));
  const double n_sel = static_cast<double>(subset.size());

  auto step = [&](std::size_t begin, std::size_t end) {
    const Model model = WithParams(init, params);
    Eigen::VectorXd grad = (2.0 * problem.lambda * n_sel) * params;
    if (end > begin) {
      const double scale = n_sel / static_cast<double>(end - begin);
      for (std::size_t k = begin; k < end; ++k) {
        const auto row = static_cast<Eigen::Index>(order[k]);
        grad.noalias() += scale * LossGrad(model, problem.train.features.row(row).transpose(),
                                           problem.train.targets(row));
      }
    }
    grad.noalias() += WeightedValidationGrad(model, problem, mu);
    adam.Step(params, grad);

    const Model updated = WithParams(init, params);
    const Eigen::VectorXd errors = GroupErrors(updated, problem.val, problem.partition);
    mu = Clamp(mu + cfg.lr_mu * (errors.array() - problem.partition.delta).matrix(), problem.C);
  };

  for (int epoch = 0; epoch < cfg.epochs; ++epoch) {
    if (order.empty()) {
      step(0, 0);
      continue;
    }
    std::shuffle(order.begin(), order.end(), rng);
    for (std::size_t begin = 0; begin < order.size(); begin += batch) {
      step(begin, std::min(order.size(), begin + batch));
    }
  }

  TrainedState state;
  state.backend = Backend::kSgd;
  state.model = WithParams(init, params);
  state.mu = mu;
  state.iterations = cfg.epochs;
  state.f_value = DualObjective(state.model, mu, subset, problem);
  if (!std::isfinite(state.f_value) || !params.allFinite()) {
    throw Error(ErrorCode::kDivergenceDetected, "sgd trainer produced a non-finite objective");
  }
  return state;
}

namespace {

struct PrimalEval {
  double value = 0.0;
  Eigen::VectorXd subgrad;
};

PrimalEval PrimalObjective(const Model& model, const IndexSet& subset, const Problem& problem,
                           bool with_grad) {
  PrimalEval out;
  const Eigen::VectorXd params = Params(model);
  const double reg = problem.lambda * params.squaredNorm();
  if (with_grad) out.subgrad = (2.0 * problem.lambda * static_cast<double>(subset.size())) * params;
  for (std::size_t i : subset) {
    const auto row = static_cast<Eigen::Index>(i);
    const auto x = problem.train.features.row(row).transpose();
    const double r = problem.train.targets(row) - Predict(model, x);
    out.value += reg + r * r;
    if (with_grad) out.subgrad.noalias() += LossGrad(model, x, problem.train.targets(row));
  }
  const Eigen::VectorXd errors = GroupErrors(model, problem.val, problem.partition);
  Eigen::VectorXd active = Eigen::VectorXd::Zero(errors.size());
  for (Eigen::Index q = 0; q < errors.size(); ++q) {
    const double excess = errors(q) - problem.partition.delta;
    if (excess > 0.0) {
      out.value += problem.C * excess;
      active(q) = problem.C;
    }
  }
  if (with_grad) out.subgrad.noalias() += WeightedValidationGrad(model, problem, active);
  return out;
}

}  // namespace

PrimalResult PrimalValue(const IndexSet& subset, const Problem& problem, const Model& start,
                         double tol, int max_iters) {
  problem.Validate();
  const bool linear = KindOf(start) == ModelKind::kLinear;
  const double n_sel = static_cast<double>(subset.size());

  // Curvature bound of the smooth pieces (linear model); caps the step.
  double smooth = 2.0 * problem.lambda * n_sel;
  for (std::size_t i : subset) {
    smooth += 2.0 * problem.train.features.row(static_cast<Eigen::Index>(i)).squaredNorm();
  }
  for (const auto& group : problem.partition.subsets) {
    double mean_norm = 0.0;
    for (std::size_t j : group) mean_norm += problem.val.features.row(static_cast<Eigen::Index>(j)).squaredNorm();
    smooth += 2.0 * problem.C * mean_norm / static_cast<double>(group.size());
  }
  smooth = std::max(smooth, 1e-12);
  const double strong = 2.0 * problem.lambda * n_sel;

  Eigen::VectorXd params = Params(start);
  Eigen::VectorXd weighted_sum = Eigen::VectorXd::Zero(params.size());
  double weight_total = 0.0;

  PrimalResult result;
  result.model = start;
  result.value = PrimalObjective(start, subset, problem, false).value;

  constexpr int kCheckEvery = 1000;
  constexpr int kWindow = 20;  // checks
  double window_start_best = result.value;
  int checks = 0;
  int t = 0;
  for (; t < max_iters; ++t) {
    const Model model = WithParams(start, params);
    const PrimalEval eval = PrimalObjective(model, subset, problem, true);
    if (eval.value < result.value) {
      result.value = eval.value;
      result.model = model;
    }
    double eta;
    if (linear && strong > 0.0) {
      eta = std::min(1.0 / smooth, 2.0 / (strong * (t + 2.0)));
    } else {
      eta = (linear ? 1.0 / smooth : 0.01 / (1.0 + n_sel + problem.C)) / std::sqrt(t + 1.0);
    }
    params -= eta * eval.subgrad;
    weighted_sum += (t + 1.0) * params;
    weight_total += t + 1.0;

    if ((t + 1) % kCheckEvery == 0) {
      const Model avg = WithParams(start, weighted_sum / weight_total);
      const double avg_value = PrimalObjective(avg, subset, problem, false).value;
      if (avg_value < result.value) {
        result.value = avg_value;
        result.model = avg;
      }
      if (++checks % kWindow == 0) {
        const double improvement = window_start_best - result.value;
        if (improvement <= tol * std::max(1.0, std::abs(result.value))) {
          result.converged = true;
          ++t;
          break;
        }
        window_start_best = result.value;
      }
    }
  }
  result.iterations = t;
  return result;
}

}  // namespace selcon
