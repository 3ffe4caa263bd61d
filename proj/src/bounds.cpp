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

#include "selcon/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "selcon/error.hpp"

namespace selcon {

namespace {

double Square(double v) { return v * v; }

void Accumulate(const Dataset& data, const char* name, DataConstants* c) {
  for (Eigen::Index i = 0; i < data.targets.size(); ++i) {
    const double ay = std::abs(data.targets(i));
    if (ay == 0.0) {
      throw Error(ErrorCode::kZeroTarget, std::string(name) + " row " + std::to_string(i) +
                                              " has y = 0; apply an offset first");
    }
    c->y_max = std::max(c->y_max, ay);
    c->y_min = std::min(c->y_min, ay);
    c->x_max = std::max(c->x_max, data.features.row(i).norm());
  }
}

}  // namespace

DataConstants ComputeDataConstants(const Dataset& train, const Dataset& val, std::size_t Q) {
  DataConstants c;
  c.y_min = std::numeric_limits<double>::infinity();
  Accumulate(train, "train", &c);
  Accumulate(val, "val", &c);
  if (train.size() + val.size() == 0) {
    throw Error(ErrorCode::kEmptyDataset, "no rows to take constants from");
  }
  c.n = train.size();
  c.d = train.dim();
  c.Q = Q;
  return c;
}

double EllStarLinear(const Dataset& train, double x_max) {
  double best = std::numeric_limits<double>::infinity();
  const double scale = x_max * x_max;
  for (Eigen::Index i = 0; i < train.targets.size(); ++i) {
    best = std::min(best, PointRidgeMin(scale, train.targets(i), train.features.row(i)));
  }
  return best;
}

double EllStarLinearProof(double lambda, const DataConstants& consts) {
  return lambda * Square(consts.y_min) / (lambda + Square(consts.x_max));
}

double Ell(const Dataset& train, double lambda, ModelKind kind) {
  double best = std::numeric_limits<double>::infinity();
  for (Eigen::Index i = 0; i < train.targets.size(); ++i) {
    const auto x = train.features.row(i);
    const double y = train.targets(i);
    best = std::min(best, kind == ModelKind::kLinear ? PointRidgeMin(lambda, y, x)
                                                     : TwoLayerPointMin(lambda, y, x));
  }
  return best;
}

double AlphaHatLinear(double lambda, double C, std::size_t Q, const DataConstants& consts) {
  const double cq = 1.0 + C * static_cast<double>(Q);
  return 1.0 - 16.0 * Square(cq) * Square(consts.y_max) * Square(consts.x_max) /
                   (lambda * Square(consts.y_min));
}

double AlphaHatNonlinear(double lambda, double C, std::size_t Q, double y_max, double H,
                         double ell_star) {
  const double cq = 1.0 + C * static_cast<double>(Q);
  return 1.0 - 32.0 * Square(cq) * Square(y_max) * Square(H) / (lambda * ell_star);
}

double KappaHat(double C, std::size_t Q, double y_max, double ell_star) {
  return 1.0 - ell_star / ((C * static_cast<double>(Q) + 1.0) * Square(y_max));
}

double LambdaMinLinear(double C, std::size_t Q, const DataConstants& consts) {
  const double cq = 1.0 + C * static_cast<double>(Q);
  return std::max(Square(consts.x_max),
                  16.0 * Square(cq) * Square(consts.y_max) * Square(consts.x_max) /
                      Square(consts.y_min));
}

double WNormBoundLinear(double C, std::size_t Q, double y_max, double x_max, double lambda) {
  return (1.0 + C * static_cast<double>(Q)) * y_max * x_max / lambda;
}

double WNormBoundGeneric(double C, std::size_t Q, double y_max, double H, double lambda) {
  return 2.0 * (1.0 + C * static_cast<double>(Q)) * y_max * H / lambda;
}

ApproxRatios ApproxRatio(std::size_t k, double alpha, double kappa, double epsilon, double ell) {
  if (!(alpha > 0.0) || alpha > 1.0) {
    throw Error(ErrorCode::kInvalidAlpha,
                "alpha = " + std::to_string(alpha) + " outside (0, 1]; the bound is vacuous");
  }
  if (k < 1) throw Error(ErrorCode::kInvalidK, "k must be >= 1");
  const double kk = static_cast<double>(k);
  ApproxRatios r;
  r.perfect = kk / (alpha * (1.0 + (kk - 1.0) * (1.0 - kappa) * alpha));
  r.imperfect = r.perfect + (epsilon == 0.0 ? 0.0 : 2.0 * kk * epsilon / ell);
  return r;
}

BoundReport ComputeBoundReport(const Dataset& train, const Dataset& val, std::size_t Q,
                               double lambda, double C, std::size_t k, double epsilon) {
  BoundReport r;
  r.consts = ComputeDataConstants(train, val, Q);
  r.alpha_hat = AlphaHatLinear(lambda, C, Q, r.consts);
  r.ell_star = EllStarLinear(train, r.consts.x_max);
  r.ell_star_proof = EllStarLinearProof(lambda, r.consts);
  r.kappa_hat = KappaHat(C, Q, r.consts.y_max, r.ell_star);
  r.ell = Ell(train, lambda);
  r.lambda_min = LambdaMinLinear(C, Q, r.consts);
  r.w_norm_bound = WNormBoundLinear(C, Q, r.consts.y_max, r.consts.x_max, lambda);
  r.epsilon_used = epsilon;
  if (r.alpha_hat > 0.0 && k >= 1) {
    r.has_ratios = true;
    r.ratios = ApproxRatio(k, r.alpha_hat, r.kappa_hat, epsilon, r.ell);
  }
  return r;
}

}  // namespace selcon
