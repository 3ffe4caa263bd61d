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

// Evaluation metrics. Every mean uses pairwise summation.

#ifndef SELCON_METRICS_HPP_
#define SELCON_METRICS_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "selcon/selcon.hpp"

namespace selcon {

// Recursive halving down to blocks of 8 summed left to right.
double PairwiseSum(const double* values, std::size_t n);
double PairwiseSum(const std::vector<double>& values);

std::vector<double> SquaredResiduals(const Model& model, const Dataset& data);

// Throws kEmptyDataset on an empty dataset.
double Mse(const Model& model, const Dataset& data);

struct GroupErrorReport {
  Eigen::VectorXd errors;
  std::vector<bool> satisfied;  // errors[q] <= delta
};

GroupErrorReport EvaluateGroupErrors(const Model& model, const Dataset& val,
                                     const ValidationPartition& partition);

// Mean of |r_i^2 - r_j^2| over all ordered pairs (i, j) with i and j in
// different groups. Throws kNeedTwoGroups when Q < 2.
double FairnessViolation(const Model& model, const Dataset& val,
                         const ValidationPartition& partition);

// baseline / method; throws kNonPositiveTime unless both are > 0.
double Speedup(double baseline_seconds, double method_seconds);

// 0.3 times the mean group error of `full_model`.
double DefaultDelta(const Model& full_model, const Dataset& val,
                    const ValidationPartition& partition);

struct SweepRow {
  std::string method;
  std::size_t k = 0;
  double delta = 0.0;
  std::uint64_t seed = 0;
  std::string metric;
  double value = 0.0;
};

// For each delta (sorted descending, +inf allowed) and seed: SELCON on
// `problem` with that delta, both selection and trainer seeded by `seed`.
// Emits test_mse and f_value rows.
std::vector<SweepRow> DeltaSweep(const Problem& problem, const SetFnOptions& options,
                                 const SelconConfig& cfg, const std::vector<double>& deltas,
                                 const std::vector<std::uint64_t>& seeds, const Dataset& test);

struct FairnessPoint {
  double delta = 0.0;
  double selcon_violation = 0.0;
  double random_violation = 0.0;
  double selcon_mse = 0.0;
  double random_mse = 0.0;
};

// For each delta: SELCON and a random k-subset, both trained under the
// constraints, scored by fairness violation and MSE on `test` with the
// group partition `test_partition`.
std::vector<FairnessPoint> FairnessSweep(const Problem& problem, const SetFnOptions& options,
                                         const SelconConfig& cfg,
                                         const std::vector<double>& deltas, const Dataset& test,
                                         const ValidationPartition& test_partition);

// Header method,k,delta,seed,metric,value; reals with 17 significant digits.
std::string SweepCsv(const std::vector<SweepRow>& rows);

}  // namespace selcon

#endif  // SELCON_METRICS_HPP_
