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

// Closed-form constants of the selection problem: data extrema, the
// alpha-submodularity and curvature certificates, the regularization
// thresholds, the parameter norm bound and the approximation ratios.

#ifndef SELCON_BOUNDS_HPP_
#define SELCON_BOUNDS_HPP_

#include <cmath>
#include <cstddef>

#include <Eigen/Dense>

#include "selcon/dataset.hpp"
#include "selcon/model.hpp"

namespace selcon {

struct DataConstants {
  double y_max = 0.0;
  double y_min = 0.0;
  double x_max = 0.0;  // largest Euclidean row norm
  std::size_t n = 0;
  std::size_t d = 0;
  std::size_t Q = 0;
};

// Extrema over train and val; throws kZeroTarget if some |y| == 0.
DataConstants ComputeDataConstants(const Dataset& train, const Dataset& val, std::size_t Q);

// min_w lambda ||w||^2 + (y - w.x)^2 = lambda y^2 / (lambda + ||x||^2)
template <typename Derived>
double PointRidgeMin(double lambda, double y, const Eigen::MatrixBase<Derived>& x) {
  return lambda * y * y / (lambda + x.squaredNorm());
}

// min_a x_max^2 y_a^2 / (x_max^2 + ||x_a||^2)
double EllStarLinear(const Dataset& train, double x_max);

// lambda y_min^2 / (lambda + x_max^2), the variant used by the linear proof.
double EllStarLinearProof(double lambda, const DataConstants& consts);

// The same minimum for the two-layer ReLU model, attained by a single active
// hidden unit: 2 lambda |y| ||x|| - lambda^2 over ||x||^2 when
// |y| ||x|| > lambda, else y^2.
template <typename Derived>
double TwoLayerPointMin(double lambda, double y, const Eigen::MatrixBase<Derived>& x) {
  const double norm = x.norm();
  const double ay = std::abs(y);
  if (ay * norm <= lambda) return y * y;
  return (2.0 * lambda * ay * norm - lambda * lambda) / (norm * norm);
}

// min_i min_w lambda ||w||^2 + (y_i - h_w(x_i))^2
double Ell(const Dataset& train, double lambda, ModelKind kind = ModelKind::kLinear);

double AlphaHatLinear(double lambda, double C, std::size_t Q, const DataConstants& consts);
double AlphaHatNonlinear(double lambda, double C, std::size_t Q, double y_max, double H,
                         double ell_star);
double KappaHat(double C, std::size_t Q, double y_max, double ell_star);
double LambdaMinLinear(double C, std::size_t Q, const DataConstants& consts);

double WNormBoundLinear(double C, std::size_t Q, double y_max, double x_max, double lambda);
double WNormBoundGeneric(double C, std::size_t Q, double y_max, double H, double lambda);

struct ApproxRatios {
  double perfect = 0.0;
  double imperfect = 0.0;
};

// perfect = k / (alpha (1 + (k-1)(1-kappa) alpha)), imperfect adds
// 2 k epsilon / ell. Throws kInvalidAlpha unless 0 < alpha <= 1.
ApproxRatios ApproxRatio(std::size_t k, double alpha, double kappa, double epsilon, double ell);

struct BoundReport {
  DataConstants consts;
  double alpha_hat = 0.0;
  double kappa_hat = 0.0;
  double ell_star = 0.0;
  double ell_star_proof = 0.0;
  double ell = 0.0;
  double lambda_min = 0.0;
  double w_norm_bound = 0.0;
  double epsilon_used = 0.0;
  // Absent (false) when alpha_hat <= 0 and the ratios are vacuous.
  bool has_ratios = false;
  ApproxRatios ratios;
};

// Certified constants for the linear model with k selected elements.
BoundReport ComputeBoundReport(const Dataset& train, const Dataset& val, std::size_t Q,
                               double lambda, double C, std::size_t k, double epsilon);

}  // namespace selcon

#endif  // SELCON_BOUNDS_HPP_
