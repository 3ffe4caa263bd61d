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

// Acceptance suite. Prints one PASS/FAIL line per criterion and exits
// non-zero when any criterion fails. argv[1] is the path of the selcon
// binary used by the determinism check.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iterator>
#include <limits>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "selcon/baselines.hpp"
#include "selcon/bounds.hpp"
#include "selcon/dual.hpp"
#include "selcon/metrics.hpp"
#include "selcon/oracle.hpp"
#include "selcon/selcon.hpp"
#include "selcon/setfn.hpp"

namespace selcon {
namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string Fmt(const char* format, ...) __attribute__((format(printf, 1, 2)));
std::string Fmt(const char* format, ...) {
  char buf[512];
  va_list args;
  va_start(args, format);
  std::vsnprintf(buf, sizeof(buf), format, args);
  va_end(args);
  return buf;
}

// Synthetic instance: the first n_train rows form D, the next n_val form V.
Problem Instance(std::uint64_t seed, std::size_t n_train, std::size_t n_val, std::size_t d,
                 std::size_t q, double lambda, double c, double noise = 0.3) {
  SyntheticSpec spec;
  spec.n = n_train + n_val;
  spec.d = d;
  spec.noise_sd = noise;
  spec.n_groups = q >= 2 ? q : 0;
  spec.seed = seed;
  const Dataset all = GenerateSynthetic(spec);
  IndexSet train(n_train);
  IndexSet val(n_val);
  std::iota(train.begin(), train.end(), std::size_t{0});
  std::iota(val.begin(), val.end(), n_train);
  Problem p;
  p.train = all.Subset(train);
  p.val = all.Subset(val);
  p.lambda = lambda;
  p.C = c;
  p.partition =
      PartitionValidation(p.val, q >= 2 ? PartitionMode::kByGroup : PartitionMode::kSingle, 0.0);
  return p;
}

double AutoDelta(const Problem& p) {
  const SelectionResult full = FullSelection(p, SetFnOptions{});
  return DefaultDelta(full.state.model, p.val, p.partition);
}

// Random small instance for the property suites: n <= 10, d <= 3, Q in {1, 2},
// delta anywhere between fully binding and slack.
Problem RandomInstance(std::uint64_t seed) {
  std::mt19937_64 rng(seed * 7919 + 13);
  std::uniform_int_distribution<std::size_t> n_dist(3, 10);
  std::uniform_int_distribution<std::size_t> d_dist(1, 3);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const std::size_t n = n_dist(rng);
  const std::size_t d = d_dist(rng);
  const std::size_t q = 1 + seed % 2;
  const double lambda = std::exp(std::log(0.05) + u(rng) * std::log(100.0));
  const double c = 0.1 + 4.9 * u(rng);
  Problem p = Instance(seed, n, 4 + q, d, q, lambda, c);
  p.partition.delta = 1.5 * u(rng) * AutoDelta(p);
  return p;
}

Outcome PointClosedForm() {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  std::uniform_int_distribution<int> dim(1, 5);
  double worst = 0.0;
  for (int t = 0; t < 200; ++t) {
    const double lambda = std::exp(u(rng));
    const double y = u(rng);
    Eigen::VectorXd x(dim(rng));
    for (auto& e : x) e = u(rng);
    const auto n = x.size();
    const Eigen::VectorXd w =
        (lambda * Eigen::MatrixXd::Identity(n, n) + x * x.transpose()).partialPivLu().solve(y * x);
    const double direct = lambda * w.squaredNorm() + std::pow(y - w.dot(x), 2);
    const double closed = PointRidgeMin(lambda, y, x);
    worst = std::max(worst, std::abs(closed - direct) / std::max(std::abs(direct), 1e-300));
  }
  return {worst <= 1e-8, Fmt("200 draws, max rel err %.2e (tol 1e-8)", worst)};
}

Outcome Monotonicity() {
  double worst = std::numeric_limits<double>::infinity();
  std::size_t marginals = 0;
  bool pass = true;
  for (std::uint64_t s = 0; s < 200; ++s) {
    SetFunction f(RandomInstance(s), SetFnOptions{});
    const OracleReport r = CheckMonotone(f, 10, s);
    worst = std::min(worst, r.worst_slack);
    marginals += r.instances;
    pass = pass && r.pass;
  }
  return {pass && worst >= -1e-8,
          Fmt("200 instances, %zu marginals, min marginal %.3e (tol -1e-8)", marginals, worst)};
}

Outcome Sandwich() {
  double worst = std::numeric_limits<double>::infinity();
  std::size_t checks = 0;
  bool pass = true;
  for (std::uint64_t s = 0; s < 200; ++s) {
    SetFunction f(RandomInstance(s), SetFnOptions{});
    const OracleReport r = CheckSandwich(f, 10, s + 1000);
    worst = std::min(worst, r.worst_slack);
    checks += r.instances;
    pass = pass && r.pass;
  }
  return {pass && worst >= -1e-7,
          Fmt("200 instances, %zu marginals, worst slack %.3e (tol -1e-7)", checks, worst)};
}

Outcome NormBound() {
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  double worst = std::numeric_limits<double>::infinity();
  for (std::uint64_t s = 0; s < 200; ++s) {
    const Problem p = RandomInstance(s);
    const std::size_t q = p.num_groups();
    Eigen::VectorXd mu(static_cast<Eigen::Index>(q));
    for (auto& m : mu) m = p.C * u(rng);
    const std::size_t n = p.train.size();
    IndexSet subset;
    while (subset.empty()) {
      subset.clear();
      for (std::size_t i = 0; i < n; ++i) {
        if (u(rng) < 0.5) subset.push_back(i);
      }
    }
    const DataConstants c = ComputeDataConstants(p.train, p.val, q);
    const double bound = WNormBoundLinear(p.C, q, c.y_max, c.x_max, p.lambda);
    const double norm = SolveInnerLinear(mu, subset, p).weights().norm();
    worst = std::min(worst, bound - norm);
  }
  return {worst >= -1e-9, Fmt("200 (mu, S) draws, min(bound - ||w||) %.3e (tol -1e-9)", worst)};
}

Outcome Duality() {
  std::mt19937_64 rng(5);
  double worst_rel = 0.0;
  for (std::uint64_t s = 0; s < 50; ++s) {
    const Problem p = RandomInstance(100 + s);
    const IndexSet subset = RandomSubset(p.train.size(), 1 + s % p.train.size(), s);
    const double f = TrainDualExact(subset, p, TrainerConfig{}).f_value;
    const double g = PrimalValue(subset, p, LinearModel<double>::Zero(p.val.features.cols())).value;
    worst_rel = std::max(worst_rel, std::abs(f - g) / std::max(std::abs(f), 1e-12));
  }
  // Two-layer: g from an independent start, capped iterations.
  double worst_weak = -std::numeric_limits<double>::infinity();
  for (std::uint64_t s = 0; s < 4; ++s) {
    Problem p = Instance(500 + s, 8, 6, 2, 1 + s % 2, 0.5, 1.0);
    p.partition.delta = AutoDelta(p);
    const IndexSet subset = RandomSubset(8, 2 + s, s);
    const TrainerConfig cfg;
    const double f = TrainDualSgd(subset, p, cfg, ModelKind::kTwoLayer).f_value;
    const double g =
        PrimalValue(subset, p, InitialModel(ModelKind::kTwoLayer, 2, cfg), 1e-9, 400'000).value;
    worst_weak = std::max(worst_weak, (f - g) / std::abs(g));
  }
  return {worst_rel <= 1e-4 && worst_weak <= 1e-4,
          Fmt("linear: 50 instances, max |f-g|/|f| %.2e (tol 1e-4); two-layer: 4 instances, "
              "max (f-g)/|g| %.2e (tol 1e-4)",
              worst_rel, worst_weak)};
}

Outcome ModularDominance() {
  double worst = std::numeric_limits<double>::infinity();
  double worst_tight = 0.0;
  bool pass = true;
  int used = 0;
  for (std::uint64_t s = 0; used < 20; ++s) {
    Problem p = Instance(300 + s, 4 + s % 5, 4, 2, 1 + s % 2, 0.5 + 0.25 * static_cast<double>(s % 7), 1.0);
    p.partition.delta = AutoDelta(p);
    SetFunction f(p, SetFnOptions{});
    const SubsetTable table = EnumerateSubsets(f);
    const double alpha = EmpiricalAlpha(table).value;
    if (!(alpha > 0.0)) {
      return {false, Fmt("instance %llu has empirical alpha %.3e <= 0",
                         static_cast<unsigned long long>(s), alpha)};
    }
    const IndexSet s_hat = RandomSubset(p.train.size(), 1 + s % (p.train.size() - 1), s);
    const OracleReport r = CheckModularBound(f, s_hat, std::min(alpha, 1.0));
    const ModularBound m = BuildModularBound(f, s_hat, std::min(alpha, 1.0));
    worst = std::min(worst, r.worst_slack);
    worst_tight = std::max(worst_tight, std::abs(m(s_hat) - f.Value(s_hat)));
    pass = pass && r.pass;
    ++used;
  }
  return {pass && worst >= -1e-8 && worst_tight <= 1e-9,
          Fmt("20 exhaustive instances, min m(X)-f(X) %.3e (tol -1e-8), max |m(S)-f(S)| %.2e "
              "(tol 1e-9)",
              worst, worst_tight)};
}

Outcome Descent() {
  double worst = std::numeric_limits<double>::infinity();
  std::size_t steps = 0;
  for (std::uint64_t s = 0; s < 50; ++s) {
    Problem p = Instance(400 + s / 5, 10, 6, 2, 1 + s % 2, 0.5, 1.0);
    p.partition.delta = AutoDelta(p);
    SetFunction f(p, SetFnOptions{});
    SelconConfig cfg;
    cfg.k = 2 + s % 3;
    cfg.seed = s;
    cfg.alpha_mode = AlphaMode::kEmpirical;
    cfg.early_stop = false;
    const SelectionResult r = RunSelcon(f, cfg);
    for (std::size_t t = 1; t < r.trace.size(); ++t) {
      worst = std::min(worst, r.trace[t - 1].f_value - r.trace[t].f_value);
      ++steps;
    }
  }
  return {worst >= -1e-9, Fmt("50 runs, %zu steps, min decrease %.3e (tol -1e-9)", steps, worst)};
}

// The exhaustive suite shared by the guarantee checks: ten training and four
// validation points with lambda at the certified threshold.
struct SuiteInstance {
  Problem problem;
  std::size_t k = 2;
};

SuiteInstance SuiteAt(int seed) {
  const std::size_t q = 1 + static_cast<std::size_t>(seed % 2);
  Problem p = Instance(100 + static_cast<std::uint64_t>(seed), 10, 4, 2, q, 1.0, 1.0);
  const DataConstants c = ComputeDataConstants(p.train, p.val, q);
  p.lambda = LambdaMinLinear(p.C, q, c);
  p.partition.delta = AutoDelta(p);
  return {p, 2 + static_cast<std::size_t>(seed % 2)};
}

struct SuiteStats {
  int violations_ratio = 0;
  double worst_ratio_slack = std::numeric_limits<double>::infinity();
  double worst_alpha_slack = std::numeric_limits<double>::infinity();
  double worst_kappa_slack = std::numeric_limits<double>::infinity();
  double min_alpha = 1.0;
  double max_kappa = 0.0;
};

SuiteStats RunSuite() {
  SuiteStats st;
  for (int seed = 0; seed < 20; ++seed) {
    const SuiteInstance inst = SuiteAt(seed);
    const Problem& p = inst.problem;
    SetFunction f(p, SetFnOptions{});
    const SubsetTable table = EnumerateSubsets(f);
    const double alpha = EmpiricalAlpha(table).value;
    const double kappa = MaxEmpiricalKappa(table).value;
    const DataConstants c = ComputeDataConstants(p.train, p.val, p.num_groups());
    const double alpha_hat = AlphaHatLinear(p.lambda, p.C, p.num_groups(), c);
    const double kappa_hat = KappaHat(p.C, p.num_groups(), c.y_max, EllStarLinear(p.train, c.x_max));
    st.worst_alpha_slack = std::min(st.worst_alpha_slack, alpha - alpha_hat);
    st.worst_kappa_slack = std::min(st.worst_kappa_slack, kappa_hat - kappa);
    st.min_alpha = std::min(st.min_alpha, alpha);
    st.max_kappa = std::max(st.max_kappa, kappa);

    SelconConfig cfg;
    cfg.k = inst.k;
    cfg.seed = static_cast<std::uint64_t>(seed);
    cfg.alpha_mode = AlphaMode::kFixed;
    cfg.alpha_value = std::min(alpha, 1.0);
    const SelectionResult r = RunSelcon(f, cfg);
    const Optimum best = BruteForceOptimum(f, inst.k);
    const double ratio = ApproxRatio(inst.k, cfg.alpha_value, kappa, 0.0, 1.0).perfect;
    const double slack = ratio * best.value - r.f_value;
    st.worst_ratio_slack = std::min(st.worst_ratio_slack, slack / best.value);
    if (slack < 0.0) ++st.violations_ratio;
  }
  return st;
}

Outcome Guarantee(const SuiteStats& st) {
  return {st.violations_ratio == 0,
          Fmt("20 exhaustive instances, %d violations, min (ratio f(S*) - f(S))/f(S*) %.3f",
              st.violations_ratio, st.worst_ratio_slack)};
}

Outcome Certificates(const SuiteStats& st) {
  DataConstants unit;
  unit.y_max = unit.y_min = unit.x_max = 1.0;
  const double alpha_spot = AlphaHatLinear(128.0, 1.0, 1, unit);
  const double kappa_spot = KappaHat(1.0, 1, 1.0, 0.5);
  const bool pass = st.worst_alpha_slack >= -1e-9 && st.worst_kappa_slack >= -1e-9 &&
                    std::abs(alpha_spot - 0.5) <= 1e-12 && std::abs(kappa_spot - 0.75) <= 1e-12;
  return {pass, Fmt("min(alpha_emp - alpha_hat) %.3e, min(kappa_hat - kappa_emp) %.3e (tol "
                    "-1e-9); spot alpha_hat %.6g, kappa_hat %.6g",
                    st.worst_alpha_slack, st.worst_kappa_slack, alpha_spot, kappa_spot)};
}

struct ImperfectStats {
  double worst_eps_ratio = 0.0;
  int violations = 0;
};

ImperfectStats RunImperfect(double lr_w) {
  ImperfectStats st;
  for (int seed = 0; seed < 20; ++seed) {
    const SuiteInstance inst = SuiteAt(seed);
    const Problem& p = inst.problem;
    SetFunction exact(p, SetFnOptions{});
    SetFnOptions sgd_opts;
    sgd_opts.backend = Backend::kSgd;
    sgd_opts.trainer.epochs = 2000;
    sgd_opts.trainer.lr_w = lr_w;
    sgd_opts.trainer.seed = static_cast<std::uint64_t>(seed);
    SetFunction sgd(p, sgd_opts);
    const std::vector<double> fe = exact.Singletons();
    const std::vector<double> fs = sgd.Singletons();
    double eps = 0.0;
    for (std::size_t i = 0; i < fe.size(); ++i) eps = std::max(eps, std::abs(fs[i] - fe[i]));
    const double ell = Ell(p.train, p.lambda);
    st.worst_eps_ratio = std::max(st.worst_eps_ratio, eps / ell);

    const SubsetTable table = EnumerateSubsets(exact);
    const double alpha = std::min(EmpiricalAlpha(table).value, 1.0);
    const double kappa = MaxEmpiricalKappa(table).value;
    SelconConfig cfg;
    cfg.k = inst.k;
    cfg.seed = static_cast<std::uint64_t>(seed);
    cfg.alpha_mode = AlphaMode::kFixed;
    cfg.alpha_value = alpha;
    const SelectionResult r = RunSelcon(sgd, cfg);
    const Optimum best = BruteForceOptimum(exact, inst.k);
    const double ratio = ApproxRatio(inst.k, alpha, kappa, eps, ell).imperfect;
    if (exact.Value(r.selected) > ratio * best.value) ++st.violations;
  }
  return st;
}

Outcome Imperfect() {
  const ImperfectStats st = RunImperfect(1e-3);
  return {st.worst_eps_ratio <= 0.02 && st.violations == 0,
          Fmt("sgd N=2000 lr_w=1e-3: max eps/ell %.2e (tol 0.02), %d ratio violations",
              st.worst_eps_ratio, st.violations)};
}

double GradientError(const Model& model, const Eigen::VectorXd& x, double y) {
  const Eigen::VectorXd analytic = LossGrad(model, x, y);
  const Eigen::VectorXd p = Params(model);
  Eigen::VectorXd numeric(p.size());
  const double h = 1e-6;
  for (Eigen::Index i = 0; i < p.size(); ++i) {
    Eigen::VectorXd plus = p;
    Eigen::VectorXd minus = p;
    plus(i) += h;
    minus(i) -= h;
    const double rp = y - Predict(WithParams(model, plus), x);
    const double rm = y - Predict(WithParams(model, minus), x);
    numeric(i) = (rp * rp - rm * rm) / (2.0 * h);
  }
  const double scale = std::max({analytic.norm(), numeric.norm(), 1e-12});
  return (analytic - numeric).norm() / scale;
}

Outcome Gradients() {
  double worst_linear = 0.0;
  double worst_two = 0.0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> normal(0.0, 1.0);
    auto draw = [&](Eigen::Index n) {
      Eigen::VectorXd v(n);
      for (auto& e : v) e = normal(rng);
      return v;
    };
    const Eigen::VectorXd x = draw(3);
    const double y = normal(rng);
    worst_linear = std::max(worst_linear, GradientError(LinearModel<double>(draw(3)), x, y));
    Eigen::MatrixXd hidden(5, 3);
    for (auto& e : hidden.reshaped()) e = normal(rng);
    worst_two = std::max(worst_two, GradientError(TwoLayerModel<double>(hidden, draw(5)), x, y));
  }
  return {worst_linear <= 1e-5 && worst_two <= 1e-5,
          Fmt("100 seeds, max rel err linear %.2e, two-layer %.2e (tol 1e-5)", worst_linear,
              worst_two)};
}

// Shared setup of the two trend checks: n = 400, d = 4 plus an intercept
// column, a 70/10/20 split, k = 40, and deltas at 4, 2, 1 and 0.5 times the
// automatic delta.
constexpr double kTrendLambda = 0.1;
constexpr double kTrendC = 10.0;
constexpr double kTrendNoise = 1.0;
constexpr std::size_t kTrendK = 40;
const std::vector<double> kTrendScales{4.0, 2.0, 1.0, 0.5};

struct TrendData {
  Problem problem;
  Dataset test;
  double delta_auto = 0.0;
};

TrendData TrendInstance(std::uint64_t seed, std::size_t groups, std::uint64_t base) {
  SyntheticSpec spec;
  spec.n = 400;
  spec.d = 4;
  spec.noise_sd = kTrendNoise;
  spec.n_groups = groups;
  spec.seed = base + seed;
  const Dataset all = OffsetAugment(GenerateSynthetic(spec), 0.0);
  SplitSpec split;
  split.train_frac = 0.7;
  split.val_frac = 0.1;
  split.test_frac = 0.2;
  split.seed = seed;
  Splits s = Split(all, split);
  TrendData out;
  out.problem.train = std::move(s.train);
  out.problem.val = std::move(s.val);
  out.problem.lambda = kTrendLambda;
  out.problem.C = kTrendC;
  out.problem.partition = PartitionValidation(
      out.problem.val, groups > 0 ? PartitionMode::kByGroup : PartitionMode::kSingle, 0.0);
  out.test = std::move(s.test);
  out.delta_auto = AutoDelta(out.problem);
  return out;
}

SelconConfig TrendConfig(std::uint64_t seed) {
  SelconConfig cfg;
  cfg.k = kTrendK;
  cfg.seed = seed;
  cfg.alpha_mode = AlphaMode::kFixed;
  cfg.alpha_value = 1.0;
  return cfg;
}

double Median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t n = v.size();
  return n % 2 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

Outcome DeltaTrend() {
  std::vector<std::vector<double>> mse(kTrendScales.size());
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const TrendData data = TrendInstance(seed, 0, 1000);
    std::vector<double> deltas;
    for (double s : kTrendScales) deltas.push_back(s * data.delta_auto);
    SetFnOptions opts;
    opts.trainer.seed = seed;
    const std::vector<SweepRow> rows =
        DeltaSweep(data.problem, opts, TrendConfig(seed), deltas, {seed}, data.test);
    std::size_t j = 0;
    for (const SweepRow& r : rows) {
      if (r.metric == "test_mse") mse[j++].push_back(r.value);
    }
  }
  const double largest = Median(mse.front());
  const double smallest = Median(mse.back());
  return {smallest <= largest,
          Fmt("median test MSE %.4f at the smallest delta vs %.4f at the largest (medians by "
              "delta: %.4f %.4f %.4f %.4f)",
              smallest, largest, Median(mse[0]), Median(mse[1]), Median(mse[2]), Median(mse[3]))};
}

Outcome Fairness() {
  int wins = 0;
  int ties = 0;
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const TrendData data = TrendInstance(seed, 4, 2000);
    Problem p = data.problem;
    p.partition.delta = kTrendScales.back() * data.delta_auto;
    SetFunction f(p, SetFnOptions{});
    const SelconConfig cfg = TrendConfig(seed);
    const SelectionResult ours = RunSelcon(f, cfg);
    const SelectionResult random = RandomWithConstraints(f, cfg.k, seed);
    const double a = FairnessViolation(ours.state.model, p.val, p.partition);
    const double b = FairnessViolation(random.state.model, p.val, p.partition);
    if (a <= b) ++wins;
    if (a == b) ++ties;
  }
  return {wins >= 7, Fmt("selcon <= random-with-constraints in %d of 10 seeds (%d exact ties), "
                         "need >= 7",
                         wins, ties)};
}

double RatioFromCertificates(const Dataset& train, const Dataset& val, double lambda,
                             std::size_t k) {
  const DataConstants c = ComputeDataConstants(train, val, 1);
  const double alpha = AlphaHatLinear(lambda, 1.0, 1, c);
  const double kappa = KappaHat(1.0, 1, c.y_max, EllStarLinear(train, c.x_max));
  return ApproxRatio(k, alpha, kappa, 0.0, 1.0).perfect;
}

Outcome OffsetEffect() {
  const Problem base = Instance(77, 30, 10, 3, 1, 1.0, 1.0);
  const std::vector<double> offsets{0.0, 1.0, 2.0, 4.0, 8.0};
  // A lambda certified at the widest target spread keeps every ratio finite.
  const Dataset train0 = OffsetAugment(base.train, 0.0);
  const Dataset val0 = OffsetAugment(base.val, 0.0);
  const double lambda = 2.0 * LambdaMinLinear(1.0, 1, ComputeDataConstants(train0, val0, 1));
  std::vector<double> spread;
  std::vector<double> ratio;
  for (double c : offsets) {
    const Dataset train = OffsetAugment(base.train, c);
    const Dataset val = OffsetAugment(base.val, c);
    const DataConstants dc = ComputeDataConstants(train, val, 1);
    spread.push_back(dc.y_max / dc.y_min);
    ratio.push_back(RatioFromCertificates(train, val, lambda, 3));
  }
  bool pass = true;
  for (std::size_t i = 1; i < offsets.size(); ++i) {
    pass = pass && spread[i] < spread[i - 1] && ratio[i] < ratio[i - 1];
  }
  std::string detail = "c = 0,1,2,4,8: y_max/y_min";
  for (double s : spread) detail += Fmt(" %.3f", s);
  detail += "; ratio";
  for (double r : ratio) detail += Fmt(" %.3f", r);
  return {pass, detail};
}

std::string ReadAll(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

Outcome Determinism(const std::string& binary) {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "selcon_acceptance_determinism";
  fs::create_directories(dir);
  const std::string data = (dir / "data.csv").string();
  auto run = [&](const std::string& args) {
    const std::string cmd = "\"" + binary + "\" " + args;
    return std::system(cmd.c_str());
  };
  if (run("gen --n 300 --d 3 --groups 3 --seed 5 --out \"" + data + "\"") != 0) {
    return {false, "gen failed"};
  }
  const std::string common = "select --data \"" + data +
                             "\" --group group --partition by_group --train-frac 0.8 "
                             "--val-frac 0.1 --test-frac 0.1 --k 12 --alpha-mode fixed --seed 3";
  const std::string exact1 = (dir / "exact1.json").string();
  const std::string exact8 = (dir / "exact8.json").string();
  const std::string sgd1 = (dir / "sgd1.json").string();
  const std::string sgd8 = (dir / "sgd8.json").string();
  const std::string sgd_args = " --backend sgd --model two_layer --epochs 100";
  const bool ran = run(common + " --threads 1 --out \"" + exact1 + "\"") == 0 &&
                   run(common + " --threads 8 --out \"" + exact8 + "\"") == 0 &&
                   run(common + sgd_args + " --threads 1 --out \"" + sgd1 + "\"") == 0 &&
                   run(common + sgd_args + " --threads 8 --out \"" + sgd8 + "\"") == 0;
  const std::string a = ReadAll(exact1);
  const std::string b = ReadAll(exact8);
  const std::string c = ReadAll(sgd1);
  const std::string d = ReadAll(sgd8);
  fs::remove_all(dir);
  if (!ran) return {false, "select failed"};
  const bool pass = !a.empty() && a == b && !c.empty() && c == d;
  return {pass, Fmt("exact/linear and sgd/two-layer reports, --threads 1 vs 8: %s (%zu and %zu "
                    "bytes)",
                    pass ? "byte-identical" : "DIFFER", a.size(), c.size())};
}

}  // namespace
}  // namespace selcon

int main(int argc, char** argv) {
  using namespace selcon;
  const std::string binary = argc > 1 ? argv[1] : "selcon";
  struct Criterion {
    int id;
    const char* name;
    std::function<Outcome()> run;
  };
  std::optional<SuiteStats> suite;
  auto stats = [&]() -> const SuiteStats& {
    if (!suite) suite = RunSuite();
    return *suite;
  };
  const std::vector<Criterion> criteria{
      {1, "single-point ridge closed form", PointClosedForm},
      {2, "monotonicity", Monotonicity},
      {3, "marginal-gain sandwich", Sandwich},
      {4, "parameter norm bound", NormBound},
      {5, "strong and weak duality", Duality},
      {6, "modular upper bound", ModularDominance},
      {7, "descent", Descent},
      {8, "approximation guarantee", [&] { return Guarantee(stats()); }},
      {9, "certified alpha and kappa", [&] { return Certificates(stats()); }},
      {10, "imperfect training", Imperfect},
      {11, "gradient check", Gradients},
      {12, "delta trend", DeltaTrend},
      {13, "fairness", Fairness},
      {14, "offset effect", OffsetEffect},
      {15, "thread-count determinism", [&] { return Determinism(binary); }},
  };
  int failed = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s %2d %s: %s [%.1fs]\n", out.pass ? "PASS" : "FAIL", c.id, c.name,
                out.detail.c_str(), secs);
    std::fflush(stdout);
    if (!out.pass) ++failed;
  }
  // Informational: the imperfect-training measurement at the default rate.
  try {
    const ImperfectStats def = RunImperfect(TrainerConfig{}.lr_w);
    std::printf("INFO    imperfect training at the default lr_w=%.3g: max eps/ell %.2e, %d ratio "
                "violations\n",
                TrainerConfig{}.lr_w, def.worst_eps_ratio, def.violations);
  } catch (const std::exception& e) {
    std::printf("INFO    imperfect training at the default lr_w: exception %s\n", e.what());
  }
  std::printf("%d of %zu criteria failed\n", failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
