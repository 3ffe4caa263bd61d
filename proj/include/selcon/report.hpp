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

// JSON forms of models, trained states, selection results, bound and
// oracle reports.

#ifndef SELCON_REPORT_HPP_
#define SELCON_REPORT_HPP_

#include <map>

#include <nlohmann/json.hpp>

#include "selcon/bounds.hpp"
#include "selcon/oracle.hpp"
#include "selcon/selcon.hpp"

namespace selcon {

using Json = nlohmann::ordered_json;

// {kind, dims: [d] or [m, d], params: [...]}
Json ModelToJson(const Model& model);
// Throws kParseFailure on a malformed object.
Model ModelFromJson(const Json& j);

Json StateToJson(const TrainedState& state);

// {method, selected, f_value, alpha, trace, state}; timing only on request.
Json SelectionToJson(const SelectionResult& result, bool with_timing);

Json BoundsToJson(const BoundReport& report);
Json OracleToJson(const OracleReport& report);

// Subset values keyed by comma-joined indices ("" for the empty set).
Json ValuesToJson(const std::map<IndexSet, double>& values);

}  // namespace selcon

#endif  // SELCON_REPORT_HPP_
