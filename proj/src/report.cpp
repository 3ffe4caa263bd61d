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

#include "selcon/report.hpp"

#include <string>
#include <vector>

#include "selcon/error.hpp"

namespace selcon {

namespace {

Json VectorJson(const Eigen::VectorXd& v) {
  return Json(std::vector<double>(v.data(), v.data() + v.size()));
}

}  // namespace

Json ModelToJson(const Model& model) {
  Json j;
  j["kind"] = ToString(KindOf(model));
  if (const auto* two = std::get_if<TwoLayerModel<double>>(&model)) {
    j["dims"] = {two->width(), two->input_dim()};
  } else {
    j["dims"] = {InputDim(model)};
  }
  j["params"] = VectorJson(Params(model));
  return j;
}

Model ModelFromJson(const Json& j) {
  try {
    const ModelKind kind = ParseModelKind(j.at("kind").get<std::string>());
    const auto dims = j.at("dims").get<std::vector<Eigen::Index>>();
    const auto raw = j.at("params").get<std::vector<double>>();
    const Eigen::VectorXd params =
        Eigen::Map<const Eigen::VectorXd>(raw.data(), static_cast<Eigen::Index>(raw.size()));
    if (kind == ModelKind::kLinear && dims.size() == 1) {
      return LinearModel<double>::FromParams(dims[0], params);
    }
    if (kind == ModelKind::kTwoLayer && dims.size() == 2) {
      return TwoLayerModel<double>::FromParams(dims[1], dims[0], params);
    }
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::kParseFailure, std::string("model json: ") + e.what());
  }
  throw Error(ErrorCode::kParseFailure, "model json: dims do not match the kind");
}

Json StateToJson(const TrainedState& state) {
  Json j;
  j["model"] = ModelToJson(state.model);
  j["mu"] = VectorJson(state.mu);
  j["f_value"] = state.f_value;
  j["iterations"] = state.iterations;
  j["backend"] = ToString(state.backend);
  j["converged"] = state.converged;
  return j;
}

Json SelectionToJson(const SelectionResult& result, bool with_timing) {
  Json j;
  j["method"] = result.method;
  j["selected"] = result.selected;
  j["f_value"] = result.f_value;
  j["alpha"] = result.alpha;
  Json trace = Json::array();
  for (const TraceEntry& t : result.trace) {
    trace.push_back({{"iteration", t.iteration}, {"f_value", t.f_value}, {"subset", t.subset_hash}});
  }
  j["trace"] = std::move(trace);
  j["state"] = StateToJson(result.state);
  if (with_timing) j["timing"] = {{"wall_seconds", result.wall_seconds}};
  return j;
}

Json BoundsToJson(const BoundReport& r) {
  Json j;
  j["y_max"] = r.consts.y_max;
  j["y_min"] = r.consts.y_min;
  j["x_max"] = r.consts.x_max;
  j["alpha_hat"] = r.alpha_hat;
  j["kappa_hat"] = r.kappa_hat;
  j["ell_star"] = r.ell_star;
  j["ell_star_proof"] = r.ell_star_proof;
  j["ell"] = r.ell;
  j["lambda_min"] = r.lambda_min;
  j["w_norm_bound"] = r.w_norm_bound;
  j["epsilon_used"] = r.epsilon_used;
  if (r.has_ratios) {
    j["ratio_perfect"] = r.ratios.perfect;
    j["ratio_imperfect"] = r.ratios.imperfect;
  } else {
    j["ratio_perfect"] = nullptr;
    j["ratio_imperfect"] = nullptr;
  }
  return j;
}

Json OracleToJson(const OracleReport& r) {
  Json j;
  j["property"] = r.property;
  j["instances"] = r.instances;
  j["worst_slack"] = r.worst_slack;
  j["tolerance"] = r.tolerance;
  j["pass"] = r.pass;
  if (r.witness) {
    Json w;
    w["S"] = r.witness->S;
    w["T"] = r.witness->T;
    if (r.witness->a) {
      w["a"] = *r.witness->a;
    } else {
      w["a"] = nullptr;
    }
    j["witness"] = std::move(w);
  } else {
    j["witness"] = nullptr;
  }
  return j;
}

Json ValuesToJson(const std::map<IndexSet, double>& values) {
  Json j = Json::object();
  for (const auto& [subset, value] : values) {
    std::string key;
    for (std::size_t i = 0; i < subset.size(); ++i) {
      if (i > 0) key += ',';
      key += std::to_string(subset[i]);
    }
    j[key] = value;
  }
  return j;
}

}  // namespace selcon
