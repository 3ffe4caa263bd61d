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

// Exhaustive verifiers for small ground sets: the optimal k-subset, the
// empirical alpha and curvature of f, and property checkers that report the
// worst slack of each inequality.

#ifndef SELCON_ORACLE_HPP_
#define SELCON_ORACLE_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "selcon/setfn.hpp"

namespace selcon {

using Mask = std::uint64_t;

IndexSet MaskToSet(Mask mask);
Mask SetToMask(const IndexSet& subset);

// f on every subset of the ground set, indexed by bit mask (bit i = element i).
struct SubsetTable {
  std::size_t n = 0;
  std::vector<double> values;

  double operator[](Mask mask) const { return values[mask]; }
};

// Throws kTooLarge when the ground set has more than max_n elements.
SubsetTable EnumerateSubsets(SetFunction& f, std::size_t max_n = 16);

struct Optimum {
  IndexSet subset;
  double value = 0.0;
  std::size_t candidates = 0;
};

// Minimum of f over all k-subsets; ties go to the lexicographically smallest
// subset. Throws kTooLarge when C(n, k) > cap and kInvalidK when k > n.
Optimum BruteForceOptimum(SetFunction& f, std::size_t k, std::size_t cap = 20000);

struct RatioEstimate {
  double value = 1.0;
  std::size_t checked = 0;
  // Ratios whose denominator was <= 1e-12.
  std::size_t skipped = 0;
};

inline constexpr double kRatioCutoff = 1e-12;

// min f(a|S) / f(a|T) over S subset of T, a outside T.
RatioEstimate EmpiricalAlpha(const SubsetTable& table);
RatioEstimate EmpiricalAlpha(SetFunction& f, std::size_t max_n = 12);

// 1 - min_a f(a | S - a) / f(a | {}) over every a in the ground set.
RatioEstimate EmpiricalKappa(const SubsetTable& table, Mask subset);
RatioEstimate EmpiricalKappa(SetFunction& f, const IndexSet& subset);
// The largest curvature over all subsets.
RatioEstimate MaxEmpiricalKappa(const SubsetTable& table);

struct Witness {
  IndexSet S;
  IndexSet T;
  std::optional<std::size_t> a;
};

struct OracleReport {
  std::string property;
  std::size_t instances = 0;
  double worst_slack = 0.0;
  double tolerance = 0.0;
  bool pass = true;
  std::optional<Witness> witness;  // set when the check failed
};

// f(S + a) - f(S) >= -1e-8 on `trials` sampled pairs; the first trial uses S = {}.
OracleReport CheckMonotone(SetFunction& f, int trials, std::uint64_t seed);

// Both marginal-gain bounds built from cross-evaluated trained states:
//   lambda ||w'||^2 + (y_a - w'.x_a)^2 <= f(a|S) <= lambda ||w''||^2 + (y_a - w''.x_a)^2
// with w' = w*(mu*(S), S + a) and w'' = w*(mu*(S + a), S). Exact backend only.
OracleReport CheckSandwich(SetFunction& f, int trials, std::uint64_t seed);

// The modular bound built at S_hat dominates f on every subset and is tight
// at S_hat (within 1e-9).
OracleReport CheckModularBound(SetFunction& f, const IndexSet& s_hat, double alpha,
                               std::size_t max_n = 12);

}  // namespace selcon

#endif  // SELCON_ORACLE_HPP_
