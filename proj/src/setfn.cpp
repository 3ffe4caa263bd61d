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

#include "selcon/setfn.hpp"

#include <algorithm>
#include <mutex>
#include <string>

#include "selcon/error.hpp"
#include "selcon/parallel.hpp"

namespace selcon {

SetFunction::SetFunction(Problem problem, SetFnOptions options)
    : problem_(std::move(problem)), options_(std::move(options)) {
  problem_.Validate();
  options_.trainer.Validate();
  if (options_.backend == Backend::kExact && options_.model != ModelKind::kLinear) {
    throw Error(ErrorCode::kInvalidArgument, "the exact backend supports the linear model only");
  }
}

IndexSet SetFunction::Canonical(IndexSet subset) const {
  std::sort(subset.begin(), subset.end());
  if (std::adjacent_find(subset.begin(), subset.end()) != subset.end()) {
    throw Error(ErrorCode::kInvalidArgument, "subset has repeated elements");
  }
  if (!subset.empty() && subset.back() >= ground_size()) {
    throw Error(ErrorCode::kInvalidArgument,
                "element " + std::to_string(subset.back()) + " outside the ground set");
  }
  return subset;
}

TrainedState SetFunction::Train(const IndexSet& canonical) const {
  if (options_.backend == Backend::kExact) {
    return TrainDualExact(canonical, problem_, options_.trainer);
  }
  return TrainDualSgd(canonical, problem_, options_.trainer, options_.model);
}

const SetFnEntry& SetFunction::Evaluate(const IndexSet& subset) {
  IndexSet key = Canonical(subset);
  {
    std::shared_lock lock(mutex_);
    auto it = cache_.find(key);
    if (it != cache_.end()) {
      hits_.fetch_add(1);
      return *it->second;
    }
  }
  misses_.fetch_add(1);
  auto entry = std::make_unique<SetFnEntry>();
  entry->state = Train(key);
  entry->value = entry->state.f_value;
  std::unique_lock lock(mutex_);
  // First write wins; a concurrent duplicate is identical anyway.
  auto [it, inserted] = cache_.try_emplace(std::move(key), std::move(entry));
  return *it->second;
}

double SetFunction::Marginal(std::size_t a, const IndexSet& subset) {
  IndexSet base = Canonical(subset);
  if (std::binary_search(base.begin(), base.end(), a)) {
    throw Error(ErrorCode::kElementAlreadyPresent,
                "element " + std::to_string(a) + " already in the subset");
  }
  IndexSet grown = base;
  grown.push_back(a);
  return Value(grown) - Value(base);
}

std::vector<double> SetFunction::ValueMany(const std::vector<IndexSet>& subsets) {
  return ParallelMap<double>(subsets.size(), options_.threads,
                             [&](std::size_t i) { return Value(subsets[i]); });
}

std::vector<double> SetFunction::Singletons() {
  std::vector<IndexSet> subsets(ground_size());
  for (std::size_t i = 0; i < subsets.size(); ++i) subsets[i] = {i};
  return ValueMany(subsets);
}

std::vector<double> SetFunction::LeaveOneOut(const IndexSet& subset) {
  const IndexSet base = Canonical(subset);
  std::vector<IndexSet> subsets(base.size());
  for (std::size_t k = 0; k < base.size(); ++k) {
    subsets[k] = base;
    subsets[k].erase(subsets[k].begin() + static_cast<std::ptrdiff_t>(k));
  }
  return ValueMany(subsets);
}

std::map<IndexSet, double> SetFunction::Values() const {
  std::shared_lock lock(mutex_);
  std::map<IndexSet, double> out;
  for (const auto& [key, entry] : cache_) out.emplace(key, entry->value);
  return out;
}

}  // namespace selcon
