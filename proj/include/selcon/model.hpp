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

// Bias-free regression models h_w(x) and the gradient of the squared loss
// (y - h_w(x))^2 with respect to every trainable parameter.
//
// Both models satisfy h_w(x) = 0 when w = 0; intercepts are modelled by
// appending a constant feature (see OffsetAugment).

#ifndef SELCON_MODEL_HPP_
#define SELCON_MODEL_HPP_

#include <string>
#include <variant>

#include <Eigen/Dense>

#include "selcon/error.hpp"

namespace selcon {

template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

enum class ModelKind { kLinear, kTwoLayer };

inline constexpr Eigen::Index kDefaultHiddenWidth = 5;

namespace internal {
inline void CheckDim(Eigen::Index expected, Eigen::Index got) {
  if (expected != got) {
    throw Error(ErrorCode::kDimensionMismatch,
                "expected " + std::to_string(expected) + ", got " + std::to_string(got));
  }
}
}  // namespace internal

// h_w(x) = w.x
template <typename Scalar>
class LinearModel {
 public:
  using VectorType = Vector<Scalar>;

  LinearModel() = default;
  explicit LinearModel(VectorType weights) : weights_(std::move(weights)) {}

  static LinearModel Zero(Eigen::Index dim) { return LinearModel(VectorType::Zero(dim)); }

  const VectorType& weights() const { return weights_; }
  Eigen::Index input_dim() const { return weights_.size(); }
  Eigen::Index param_count() const { return weights_.size(); }

  template <typename Derived>
  Scalar Predict(const Eigen::MatrixBase<Derived>& x) const {
    internal::CheckDim(weights_.size(), x.size());
    return weights_.dot(x.template cast<Scalar>());
  }

  // d/dw (y - w.x)^2 = -2 (y - w.x) x
  template <typename Derived>
  VectorType LossGrad(const Eigen::MatrixBase<Derived>& x, Scalar y) const {
    const Scalar residual = y - Predict(x);
    return Scalar(-2) * residual * x.template cast<Scalar>();
  }

  VectorType Params() const { return weights_; }
  Scalar SquaredNorm() const { return weights_.squaredNorm(); }

  static LinearModel FromParams(Eigen::Index dim, const VectorType& params) {
    internal::CheckDim(dim, params.size());
    return LinearModel(params);
  }

 private:
  VectorType weights_;
};

// h_w(x) = output . ReLU(hidden x), hidden is m x d.
//
// Flat parameter layout: hidden in row-major order (m*d entries), then the
// m output weights.
template <typename Scalar>
class TwoLayerModel {
 public:
  using VectorType = Vector<Scalar>;
  using MatrixType = Matrix<Scalar>;

  TwoLayerModel() = default;
  TwoLayerModel(MatrixType hidden, VectorType output)
      : hidden_(std::move(hidden)), output_(std::move(output)) {
    internal::CheckDim(hidden_.rows(), output_.size());
  }

  static TwoLayerModel Zero(Eigen::Index dim, Eigen::Index width = kDefaultHiddenWidth) {
    return TwoLayerModel(MatrixType::Zero(width, dim), VectorType::Zero(width));
  }

  const MatrixType& hidden() const { return hidden_; }
  const VectorType& output() const { return output_; }
  Eigen::Index width() const { return hidden_.rows(); }
  Eigen::Index input_dim() const { return hidden_.cols(); }
  Eigen::Index param_count() const { return hidden_.size() + output_.size(); }

  template <typename Derived>
  Scalar Predict(const Eigen::MatrixBase<Derived>& x) const {
    internal::CheckDim(hidden_.cols(), x.size());
    return output_.dot((hidden_ * x.template cast<Scalar>()).cwiseMax(Scalar(0)));
  }

  // ReLU'(0) is taken as 0.
  template <typename Derived>
  VectorType LossGrad(const Eigen::MatrixBase<Derived>& x, Scalar y) const {
    internal::CheckDim(hidden_.cols(), x.size());
    const VectorType xs = x.template cast<Scalar>();
    const VectorType pre = hidden_ * xs;
    const VectorType act = pre.cwiseMax(Scalar(0));
    const Scalar scale = Scalar(-2) * (y - output_.dot(act));

    VectorType grad(param_count());
    const Eigen::Index m = width();
    const Eigen::Index d = input_dim();
    for (Eigen::Index r = 0; r < m; ++r) {
      const Scalar gate = pre(r) > Scalar(0) ? output_(r) : Scalar(0);
      grad.segment(r * d, d) = scale * gate * xs;
    }
    grad.tail(m) = scale * act;
    return grad;
  }

  VectorType Params() const {
    VectorType p(param_count());
    const Eigen::Index d = input_dim();
    for (Eigen::Index r = 0; r < width(); ++r) p.segment(r * d, d) = hidden_.row(r).transpose();
    p.tail(width()) = output_;
    return p;
  }

  Scalar SquaredNorm() const { return hidden_.squaredNorm() + output_.squaredNorm(); }

  static TwoLayerModel FromParams(Eigen::Index dim, Eigen::Index width, const VectorType& params) {
    internal::CheckDim(width * dim + width, params.size());
    MatrixType hidden(width, dim);
    for (Eigen::Index r = 0; r < width; ++r) hidden.row(r) = params.segment(r * dim, dim).transpose();
    return TwoLayerModel(std::move(hidden), params.tail(width));
  }

 private:
  MatrixType hidden_;
  VectorType output_;
};

// Runtime-polymorphic model used by trainers and the set function.
using Model = std::variant<LinearModel<double>, TwoLayerModel<double>>;

inline ModelKind KindOf(const Model& model) {
  return std::holds_alternative<LinearModel<double>>(model) ? ModelKind::kLinear
                                                           : ModelKind::kTwoLayer;
}

inline Model ZeroModel(ModelKind kind, Eigen::Index dim, Eigen::Index width = kDefaultHiddenWidth) {
  if (kind == ModelKind::kLinear) return LinearModel<double>::Zero(dim);
  return TwoLayerModel<double>::Zero(dim, width);
}

template <typename Derived>
double Predict(const Model& model, const Eigen::MatrixBase<Derived>& x) {
  return std::visit([&](const auto& m) { return m.Predict(x); }, model);
}

template <typename Derived>
Eigen::VectorXd LossGrad(const Model& model, const Eigen::MatrixBase<Derived>& x, double y) {
  return std::visit([&](const auto& m) -> Eigen::VectorXd { return m.LossGrad(x, y); }, model);
}

inline Eigen::VectorXd Params(const Model& model) {
  return std::visit([](const auto& m) -> Eigen::VectorXd { return m.Params(); }, model);
}

inline double SquaredNorm(const Model& model) {
  return std::visit([](const auto& m) { return m.SquaredNorm(); }, model);
}

inline Eigen::Index InputDim(const Model& model) {
  return std::visit([](const auto& m) { return m.input_dim(); }, model);
}

// Same architecture as `like`, parameters taken from `params`.
inline Model WithParams(const Model& like, const Eigen::VectorXd& params) {
  if (const auto* lin = std::get_if<LinearModel<double>>(&like)) {
    return LinearModel<double>::FromParams(lin->input_dim(), params);
  }
  const auto& two = std::get<TwoLayerModel<double>>(like);
  return TwoLayerModel<double>::FromParams(two.input_dim(), two.width(), params);
}

inline std::string ToString(ModelKind kind) {
  return kind == ModelKind::kLinear ? "linear" : "two_layer";
}

inline ModelKind ParseModelKind(const std::string& s) {
  if (s == "linear") return ModelKind::kLinear;
  if (s == "two_layer" || s == "two-layer") return ModelKind::kTwoLayer;
  throw Error(ErrorCode::kInvalidArgument, "unknown model kind '" + s + "'");
}

}  // namespace selcon

#endif  // SELCON_MODEL_HPP_
