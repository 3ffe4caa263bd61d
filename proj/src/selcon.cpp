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

#include "selcon/selcon.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <numeric>

#include "selcon/baselines.hpp"
#include "selcon/bounds.hpp"
#include "selcon/error.hpp"
#include "selcon/oracle.hpp"

namespace selcon {

std::string ToString(AlphaMode mode) {
  switch (mode) {
    case AlphaMode::kCertified:
      return "certified";
    case AlphaMode::kEmpirical:
      return "empirical";
    case AlphaMode::kFixed:
      return "fixed";
  }
  return "certified";
}

AlphaMode ParseAlphaMode(const std::string& s) {
  if (s == "certified") return AlphaMode::kCertified;
  if (s == "empirical") return AlphaMode::kEmpirical;
  if (s == "fixed") return AlphaMode::kFixed;
  throw Error(ErrorCode::kInvalidArgument, "unknown alpha mode '" + s + "'");
}

void SelconConfig::Validate(std::size_t n) const {
  if (k < 1 || k > n) {
    throw Error(ErrorCode::kInvalidK,
                "k = " + std::to_string(k) + " must lie in [1, " + std::to_string(n) + "]");
  }
  if (iterations < 1) throw Error(ErrorCode::kInvalidArgument, "iterations must be >= 1");
  if (!(alpha_floor > 0.0) || alpha_floor > 1.0) {
    throw Error(ErrorCode::kInvalidAlpha, "alpha_floor must lie in (0, 1]");
  }
  if (alpha_mode == AlphaMode::kFixed && (!(alpha_value > 0.0) || alpha_value > 1.0)) {
    throw Error(ErrorCode::kInvalidAlpha, "fixed alpha must lie in (0, 1]");
  }
  if (initial) {
    IndexSet s = *initial;
    std::sort(s.begin(), s.end());
    if (s.size() != k || std::adjacent_find(s.begin(), s.end()) != s.end() ||
        (!s.empty() && s.back() >= n)) {
      throw Error(ErrorCode::kInvalidArgument, "initial subset must hold k distinct elements");
    }
  }
}

std::string SubsetHash(const IndexSet& subset) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (std::size_t v : subset) {
    auto x = static_cast<std::uint64_t>(v);
    for (int b = 0; b < 8; ++b) {
      h ^= (x >> (8 * b)) & 0xffU;
      h *= 0x100000001b3ULL;
    }
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

IndexSet KSmallest(const std::vector<double>& scores, std::size_t k) {
  IndexSet order(scores.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  k = std::min(k, order.size());
  std::partial_sort(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(k), order.end(),
                    [&](std::size_t a, std::size_t b) {
                      return scores[a] < scores[b] || (scores[a] == scores[b] && a < b);
                    });
  order.resize(k);
  std::sort(order.begin(), order.end());
  return order;
}

double ModularBound::operator()(const IndexSet& x) const {
  double value = f_hat;
  for (std::size_t i : s_hat) value -= scores[i];
  for (std::size_t i : x) value += scores[i];
  return value;
}

ModularBound BuildModularBound(SetFunction& f, const IndexSet& s_hat, double alpha) {
  if (!(alpha > 0.0)) throw Error(ErrorCode::kInvalidAlpha, "alpha must be > 0");
  ModularBound m;
  m.s_hat = f.Canonical(s_hat);
  if (m.s_hat.empty()) throw Error(ErrorCode::kInvalidArgument, "modular bound needs |S| >= 1");
  m.f_hat = f.Value(m.s_hat);
  const std::vector<double> singles = f.Singletons();
  const double f_empty = f.Empty();
  m.scores.resize(singles.size());
  for (std::size_t i = 0; i < singles.size(); ++i) m.scores[i] = (singles[i] - f_empty) / alpha;
  const std::vector<double> loo = f.LeaveOneOut(m.s_hat);
  for (std::size_t k = 0; k < m.s_hat.size(); ++k) {
    m.scores[m.s_hat[k]] = alpha * (m.f_hat - loo[k]);
  }
  return m;
}

std::vector<double> ModularScores(SetFunction& f, const IndexSet& s_hat, double alpha) {
  return BuildModularBound(f, s_hat, alpha).scores;
}

double EffectiveAlpha(SetFunction& f, const SelconConfig& cfg) {
  switch (cfg.alpha_mode) {
    case AlphaMode::kFixed:
      return cfg.alpha_value;
    case AlphaMode::kEmpirical: {
      const double a = EmpiricalAlpha(f, cfg.empirical_max_n).value;
      return a > 0.0 ? std::min(a, 1.0) : cfg.alpha_floor;
    }
    case AlphaMode::kCertified:
      break;
  }
  if (f.options().model != ModelKind::kLinear) return cfg.alpha_floor;
  const Problem& p = f.problem();
  try {
    const DataConstants c = ComputeDataConstants(p.train, p.val, p.num_groups());
    return std::clamp(AlphaHatLinear(p.lambda, p.C, p.num_groups(), c), cfg.alpha_floor, 1.0);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kZeroTarget) throw;
    return cfg.alpha_floor;
  }
}

SelectionResult RunSelcon(SetFunction& f, const SelconConfig& cfg) {
  const auto start = std::chrono::steady_clock::now();
  const std::size_t n = f.ground_size();
  cfg.Validate(n);

  SelectionResult result;
  result.alpha = EffectiveAlpha(f, cfg);
  IndexSet current = cfg.initial ? f.Canonical(*cfg.initial) : RandomSubset(n, cfg.k, cfg.seed);
  result.trace.push_back({0, f.Value(current), SubsetHash(current)});

  for (int iter = 1; iter <= cfg.iterations; ++iter) {
    const ModularBound bound = BuildModularBound(f, current, result.alpha);
    IndexSet next = KSmallest(bound.scores, cfg.k);
    if (cfg.early_stop && next == current) break;
    current = std::move(next);
    result.trace.push_back({iter, f.Value(current), SubsetHash(current)});
  }

  const SetFnEntry& entry = f.Evaluate(current);
  result.selected = current;
  result.f_value = entry.value;
  result.state = entry.state;
  result.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

SelectionResult RunSelconUnconstrained(const Problem& problem, const SetFnOptions& options,
                                       const SelconConfig& cfg) {
  Problem unconstrained = problem;
  unconstrained.C = 0.0;
  SetFunction f(std::move(unconstrained), options);
  SelectionResult result = RunSelcon(f, cfg);
  result.method = "selcon_unconstrained";
  return result;
}

}  // namespace selcon
