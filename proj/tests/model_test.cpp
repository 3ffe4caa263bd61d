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

#include "selcon/model.hpp"

#include <random>

#include "gtest/gtest.h"

namespace selcon {
namespace {

TEST(LinearModelTest, Predict) {
  const LinearModel<double> m(Eigen::Vector2d(1.0, 2.0));
  EXPECT_DOUBLE_EQ(m.Predict(Eigen::Vector2d(3.0, 4.0)), 11.0);
}

TEST(LinearModelTest, LossGrad) {
  const LinearModel<double> m(Eigen::VectorXd::Zero(1));
  const Eigen::VectorXd g = m.LossGrad(Eigen::VectorXd::Ones(1), 1.0);
  EXPECT_DOUBLE_EQ(g(0), -2.0);
  const LinearModel<double> exact(Eigen::Vector2d(1.0, 2.0));
  EXPECT_TRUE(exact.LossGrad(Eigen::Vector2d(3.0, 4.0), 11.0).isZero());
}

TEST(LinearModelTest, FloatScalar) {
  const LinearModel<float> m(Eigen::Vector2f(1.0f, 2.0f));
  EXPECT_FLOAT_EQ(m.Predict(Eigen::Vector2d(3.0, 4.0)), 11.0f);
}

TEST(LinearModelTest, DimensionMismatchThrows) {
  const LinearModel<double> m(Eigen::Vector2d(1.0, 2.0));
  EXPECT_THROW(m.Predict(Eigen::Vector3d::Zero()), Error);
}

TEST(TwoLayerModelTest, ZeroOutputPredictsZero) {
  TwoLayerModel<double> m(Eigen::MatrixXd::Random(3, 2), Eigen::VectorXd::Zero(3));
  EXPECT_DOUBLE_EQ(m.Predict(Eigen::Vector2d(0.3, -0.7)), 0.0);
}

TEST(TwoLayerModelTest, ReluGates) {
  Eigen::MatrixXd hidden(1, 2);
  hidden << 1.0, -1.0;
  const TwoLayerModel<double> m(hidden, Eigen::VectorXd::Constant(1, 2.0));
  EXPECT_DOUBLE_EQ(m.Predict(Eigen::Vector2d(1.0, 3.0)), 0.0);
  EXPECT_DOUBLE_EQ(m.Predict(Eigen::Vector2d(3.0, 1.0)), 4.0);
}

TEST(TwoLayerModelTest, ParamsRoundTrip) {
  const TwoLayerModel<double> m(Eigen::MatrixXd::Random(4, 3), Eigen::VectorXd::Random(4));
  const Model wrapped = m;
  const Model back = WithParams(wrapped, Params(wrapped));
  EXPECT_EQ(Params(back), Params(wrapped));
  EXPECT_NEAR(SquaredNorm(wrapped), Params(wrapped).squaredNorm(), 1e-12);
  EXPECT_EQ(InputDim(wrapped), 3);
  EXPECT_EQ(KindOf(wrapped), ModelKind::kTwoLayer);
}

double FiniteDifferenceError(const Model& model, const Eigen::VectorXd& x, double y) {
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
  return (analytic - numeric).norm() / std::max(1.0, numeric.norm());
}

TEST(GradientTest, MatchesFiniteDifferences) {
  std::mt19937_64 rng(11);
  std::normal_distribution<double> normal(0.0, 1.0);
  auto draw = [&](Eigen::Index n) {
    Eigen::VectorXd v(n);
    for (auto& e : v) e = normal(rng);
    return v;
  };
  for (int trial = 0; trial < 20; ++trial) {
    const Eigen::VectorXd x = draw(3);
    const double y = normal(rng);
    const Model linear = LinearModel<double>(draw(3));
    EXPECT_LT(FiniteDifferenceError(linear, x, y), 1e-5);
    Eigen::MatrixXd hidden(5, 3);
    for (auto& e : hidden.reshaped()) e = normal(rng);
    const Model two = TwoLayerModel<double>(hidden, draw(5));
    EXPECT_LT(FiniteDifferenceError(two, x, y), 1e-5);
  }
}

TEST(ModelKindTest, Names) {
  EXPECT_EQ(ToString(ModelKind::kLinear), "linear");
  EXPECT_EQ(ParseModelKind("two_layer"), ModelKind::kTwoLayer);
  EXPECT_THROW(ParseModelKind("cnn"), Error);
}

}  // namespace
}  // namespace selcon
