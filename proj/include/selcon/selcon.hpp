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

// Majorization-minimization over k-subsets: at every iteration f is replaced
// by a modular upper bound that is tight at the current subset, and the k
// elements with the smallest scores become the next subset.

#ifndef SELCON_SELCON_HPP_
#define SELCON_SELCON_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "selcon/setfn.hpp"

namespace selcon {

enum class AlphaMode { kCertified, kEmpirical, kFixed };

std::string ToString(AlphaMode mode);
AlphaMode ParseAlphaMode(const std::string& s);

struct SelconConfig {
  std::size_t k = 1;
  int iterations = 10;  // L
  AlphaMode alpha_mode = AlphaMode::kCertified;
  double alpha_value = 1.0;   // used by kFixed
  double alpha_floor = 0.05;  // substitute when the certificate is vacuous
  std::size_t empirical_max_n = 12;
  std::uint64_t seed = 0;
  bool early_stop = true;
  // Starting subset; sampled uniformly with `seed` when absent.
  std::optional<IndexSet> initial;

  // Throws kInvalidK unless 1 <= k <= n, kInvalidArgument on the rest.
  void Validate(std::size_t n) const;
};

struct TraceEntry {
  int iteration = 0;
  double f_value = 0.0;
  std::string subset_hash;
};

struct SelectionResult {
  std::string method = "selcon";
  IndexSet selected;
  double f_value = 0.0;
  std::vector<TraceEntry> trace;  // entry 0 is the starting subset
  TrainedState state;
  double alpha = 1.0;
  double wall_seconds = 0.0;
};

// 16 hex digits of FNV-1a over the indices.
std::string SubsetHash(const IndexSet& subset);

// Indices of the k smallest scores, ordered by (score, index), returned sorted.
IndexSet KSmallest(const std::vector<double>& scores, std::size_t k);

// m(X) = f(S) - sum_{i in S} score_i + sum_{i in X} score_i, with
// score_i = alpha f(i | S - i) inside S and f(i | {}) / alpha outside.
struct ModularBound {
  IndexSet s_hat;
  double f_hat = 0.0;
  std::vector<double> scores;

  double operator()(const IndexSet& x) const;
};

ModularBound BuildModularBound(SetFunction& f, const IndexSet& s_hat, double alpha);
std::vector<double> ModularScores(SetFunction& f, const IndexSet& s_hat, double alpha);

// The alpha consumed by the driver under cfg.alpha_mode. Certified mode uses
// the linear certificate clamped to [alpha_floor, 1] and falls back to
// alpha_floor for the two-layer model or data with a zero target.
double EffectiveAlpha(SetFunction& f, const SelconConfig& cfg);

SelectionResult RunSelcon(SetFunction& f, const SelconConfig& cfg);

// The same driver with C = 0.
SelectionResult RunSelconUnconstrained(const Problem& problem, const SetFnOptions& options,
                                       const SelconConfig& cfg);

}  // namespace selcon

#endif  // SELCON_SELCON_HPP_
