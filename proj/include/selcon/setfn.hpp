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

// The memoized set function f(S) = max_{0 <= mu <= C} min_w F(w, mu, S).

#ifndef SELCON_SETFN_HPP_
#define SELCON_SETFN_HPP_

#include <atomic>
#include <map>
#include <memory>
#include <shared_mutex>
#include <vector>

#include "selcon/dual.hpp"

namespace selcon {

struct SetFnOptions {
  Backend backend = Backend::kExact;
  ModelKind model = ModelKind::kLinear;
  TrainerConfig trainer;
  int threads = 1;  // cap on the fan-out of batched evaluations
};

struct SetFnEntry {
  double value = 0.0;
  TrainedState state;
};

class SetFunction {
 public:
  // Validates the problem; the exact backend requires the linear model.
  SetFunction(Problem problem, SetFnOptions options);

  SetFunction(const SetFunction&) = delete;
  SetFunction& operator=(const SetFunction&) = delete;

  const Problem& problem() const { return problem_; }
  const SetFnOptions& options() const { return options_; }
  std::size_t ground_size() const { return problem_.train.size(); }

  // Sorted, duplicate-free copy of `subset`; throws kInvalidArgument on
  // out-of-range or repeated indices.
  IndexSet Canonical(IndexSet subset) const;

  // f(S) and its trained state. Safe for concurrent callers; the reference
  // stays valid for the lifetime of the object.
  const SetFnEntry& Evaluate(const IndexSet& subset);
  double Value(const IndexSet& subset) { return Evaluate(subset).value; }

  // f(S + a) - f(S); throws kElementAlreadyPresent when a is in S.
  double Marginal(std::size_t a, const IndexSet& subset);

  double Empty() { return Value({}); }

  // f({i}) for every element of the ground set, in index order.
  std::vector<double> Singletons();

  // f(S - s) for every s in S, in the order of the canonical S.
  std::vector<double> LeaveOneOut(const IndexSet& subset);

  // Values of all `subsets`, trained in parallel; order follows the input.
  std::vector<double> ValueMany(const std::vector<IndexSet>& subsets);

  std::size_t hits() const { return hits_.load(); }
  std::size_t misses() const { return misses_.load(); }

  // Snapshot of every cached value keyed by canonical subset.
  std::map<IndexSet, double> Values() const;

 private:
  TrainedState Train(const IndexSet& canonical) const;

  Problem problem_;
  SetFnOptions options_;
  mutable std::shared_mutex mutex_;
  std::map<IndexSet, std::unique_ptr<const SetFnEntry>> cache_;
  std::atomic<std::size_t> hits_{0};
  std::atomic<std::size_t> misses_{0};
};

}  // namespace selcon

#endif  // SELCON_SETFN_HPP_
