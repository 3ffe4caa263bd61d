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

#include "selcon/metrics.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "selcon/baselines.hpp"
#include "selcon/error.hpp"

namespace selcon {

double PairwiseSum(const double* values, std::size_t n) {
  if (n <= 8) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += values[i];
    return s;
  }
  const std::size_t half = n / 2;
  return PairwiseSum(values, half) + PairwiseSum(values + half, n - half);
}

double PairwiseSum(const std::vector<double>& values) {
  return PairwiseSum(values.data(), values.size());
}

std::vector<double> SquaredResiduals(const Model& model, const Dataset& data) {
  std::vector<double> out(data.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    const auto row = static_cast<Eigen::Index>(i);
    const double r = data.targets(row) - Predict(model, data.features.row(row).transpose());
    out[i] = r * r;
  }
  return out;
}

double Mse(const Model& model, const Dataset& data) {
  if (data.size() == 0) throw Error(ErrorCode::kEmptyDataset, "mse of an empty dataset");
  return PairwiseSum(SquaredResiduals(model, data)) / static_cast<double>(data.size());
}

GroupErrorReport EvaluateGroupErrors(const Model& model, const Dataset& val,
                                     const ValidationPartition& partition) {
  const std::vector<double> sq = SquaredResiduals(model, val);
  GroupErrorReport report;
  report.errors.resize(static_cast<Eigen::Index>(partition.num_groups()));
  for (std::size_t q = 0; q < partition.num_groups(); ++q) {
    std::vector<double> group;
    group.reserve(partition.subsets[q].size());
    for (std::size_t j : partition.subsets[q]) group.push_back(sq.at(j));
    const double err = PairwiseSum(group) / static_cast<double>(group.size());
    report.errors(static_cast<Eigen::Index>(q)) = err;
    report.satisfied.push_back(err <= partition.delta);
  }
  return report;
}

double FairnessViolation(const Model& model, const Dataset& val,
                         const ValidationPartition& partition) {
  if (partition.num_groups() < 2) {
    throw Error(ErrorCode::kNeedTwoGroups, "fairness violation needs at least two groups");
  }
  const std::vector<double> sq = SquaredResiduals(model, val);
  std::vector<double> terms;
  for (std::size_t q = 0; q < partition.num_groups(); ++q) {
    for (std::size_t i : partition.subsets[q]) {
      for (std::size_t p = 0; p < partition.num_groups(); ++p) {
        if (p == q) continue;
        for (std::size_t j : partition.subsets[p]) terms.push_back(std::abs(sq.at(i) - sq.at(j)));
      }
    }
  }
  if (terms.empty()) throw Error(ErrorCode::kNeedTwoGroups, "no cross-group pairs");
  return PairwiseSum(terms) / static_cast<double>(terms.size());
}

double Speedup(double baseline_seconds, double method_seconds) {
  if (!(baseline_seconds > 0.0) || !(method_seconds > 0.0)) {
    throw Error(ErrorCode::kNonPositiveTime, "speedup needs positive durations");
  }
  return baseline_seconds / method_seconds;
}

double DefaultDelta(const Model& full_model, const Dataset& val,
                    const ValidationPartition& partition) {
  const GroupErrorReport report = EvaluateGroupErrors(full_model, val, partition);
  std::vector<double> errs(report.errors.data(), report.errors.data() + report.errors.size());
  return 0.3 * PairwiseSum(errs) / static_cast<double>(errs.size());
}

std::vector<SweepRow> DeltaSweep(const Problem& problem, const SetFnOptions& options,
                                 const SelconConfig& cfg, const std::vector<double>& deltas,
                                 const std::vector<std::uint64_t>& seeds, const Dataset& test) {
  for (std::size_t i = 1; i < deltas.size(); ++i) {
    if (deltas[i] > deltas[i - 1]) {
      throw Error(ErrorCode::kInvalidArgument, "deltas must be sorted in descending order");
    }
  }
  std::vector<SweepRow> rows;
  for (double delta : deltas) {
    for (std::uint64_t seed : seeds) {
      Problem p = problem;
      p.partition.delta = delta;
      SetFnOptions opts = options;
      opts.trainer.seed = seed;
      SelconConfig run_cfg = cfg;
      run_cfg.seed = seed;
      SetFunction f(std::move(p), opts);
      const SelectionResult r = RunSelcon(f, run_cfg);
      rows.push_back({"selcon", cfg.k, delta, seed, "test_mse", Mse(r.state.model, test)});
      rows.push_back({"selcon", cfg.k, delta, seed, "f_value", r.f_value});
    }
  }
  return rows;
}

std::vector<FairnessPoint> FairnessSweep(const Problem& problem, const SetFnOptions& options,
                                         const SelconConfig& cfg,
                                         const std::vector<double>& deltas, const Dataset& test,
                                         const ValidationPartition& test_partition) {
  std::vector<FairnessPoint> points;
  for (double delta : deltas) {
    Problem p = problem;
    p.partition.delta = delta;
    SetFunction f(std::move(p), options);
    const SelectionResult ours = RunSelcon(f, cfg);
    const SelectionResult random = RandomWithConstraints(f, cfg.k, cfg.seed);
    FairnessPoint point;
    point.delta = delta;
    point.selcon_violation = FairnessViolation(ours.state.model, test, test_partition);
    point.random_violation = FairnessViolation(random.state.model, test, test_partition);
    point.selcon_mse = Mse(ours.state.model, test);
    point.random_mse = Mse(random.state.model, test);
    points.push_back(point);
  }
  return points;
}

std::string SweepCsv(const std::vector<SweepRow>& rows) {
  std::ostringstream out;
  out << "method,k,delta,seed,metric,value\n";
  char buf[64];
  for (const SweepRow& r : rows) {
    out << r.method << ',' << r.k << ',';
    std::snprintf(buf, sizeof(buf), "%.17g", r.delta);
    out << buf << ',' << r.seed << ',' << r.metric << ',';
    std::snprintf(buf, sizeof(buf), "%.17g", r.value);
    out << buf << '\n';
  }
  return out.str();
}

}  // namespace selcon
