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

#include "selcon/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>

#include "selcon/error.hpp"
#include "selcon/selcon.hpp"

namespace selcon {

IndexSet MaskToSet(Mask mask) {
  IndexSet out;
  for (std::size_t i = 0; mask != 0; ++i, mask >>= 1) {
    if (mask & 1U) out.push_back(i);
  }
  return out;
}

Mask SetToMask(const IndexSet& subset) {
  Mask mask = 0;
  for (std::size_t i : subset) {
    if (i >= 64) throw Error(ErrorCode::kTooLarge, "masks hold at most 64 elements");
    mask |= Mask{1} << i;
  }
  return mask;
}

namespace {

void CheckSize(std::size_t n, std::size_t max_n) {
  if (n > max_n || n >= 63) {
    throw Error(ErrorCode::kTooLarge, "exhaustive enumeration over n = " + std::to_string(n) +
                                          " exceeds the limit " + std::to_string(max_n));
  }
}

}  // namespace

SubsetTable EnumerateSubsets(SetFunction& f, std::size_t max_n) {
  const std::size_t n = f.ground_size();
  CheckSize(n, max_n);
  const Mask count = Mask{1} << n;
  std::vector<IndexSet> subsets(count);
  for (Mask m = 0; m < count; ++m) subsets[m] = MaskToSet(m);
  SubsetTable table;
  table.n = n;
  table.values = f.ValueMany(subsets);
  return table;
}

Optimum BruteForceOptimum(SetFunction& f, std::size_t k, std::size_t cap) {
  const std::size_t n = f.ground_size();
  if (k > n) throw Error(ErrorCode::kInvalidK, "k exceeds n");
  // C(n, k) with early exit once it passes the cap.
  std::size_t total = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    total = total * (n - k + i) / i;
    if (total > cap) {
      throw Error(ErrorCode::kTooLarge, "C(n, k) exceeds the cap " + std::to_string(cap));
    }
  }
  std::vector<IndexSet> candidates;
  candidates.reserve(total);
  IndexSet combo(k);
  std::iota(combo.begin(), combo.end(), std::size_t{0});
  while (true) {
    candidates.push_back(combo);
    std::size_t i = k;
    while (i > 0 && combo[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++combo[i - 1];
    for (std::size_t j = i; j < k; ++j) combo[j] = combo[j - 1] + 1;
  }
  const std::vector<double> values = f.ValueMany(candidates);
  std::size_t best = 0;
  for (std::size_t c = 1; c < values.size(); ++c) {
    if (values[c] < values[best]) best = c;
  }
  return {candidates[best], values[best], candidates.size()};
}

RatioEstimate EmpiricalAlpha(const SubsetTable& table) {
  const std::size_t n = table.n;
  const Mask count = Mask{1} << n;
  constexpr double kInf = std::numeric_limits<double>::infinity();
  RatioEstimate est;
  std::vector<double> low(count);
  for (std::size_t a = 0; a < n; ++a) {
    const Mask bit = Mask{1} << a;
    // low[T] = min over S subset of T of f(a|S), for T without a.
    for (Mask t = 0; t < count; ++t) {
      low[t] = (t & bit) ? kInf : table[t | bit] - table[t];
    }
    for (std::size_t b = 0; b < n; ++b) {
      const Mask bb = Mask{1} << b;
      for (Mask t = 0; t < count; ++t) {
        if (t & bb) low[t] = std::min(low[t], low[t ^ bb]);
      }
    }
    for (Mask t = 0; t < count; ++t) {
      if (t & bit) continue;
      const std::size_t triples = std::size_t{1} << std::popcount(t);
      const double denom = table[t | bit] - table[t];
      if (denom <= kRatioCutoff) {
        est.skipped += triples;
        continue;
      }
      est.checked += triples;
      est.value = std::min(est.value, low[t] / denom);
    }
  }
  return est;
}

RatioEstimate EmpiricalAlpha(SetFunction& f, std::size_t max_n) {
  CheckSize(f.ground_size(), max_n);
  return EmpiricalAlpha(EnumerateSubsets(f, max_n));
}

RatioEstimate EmpiricalKappa(const SubsetTable& table, Mask subset) {
  RatioEstimate est;
  double min_ratio = std::numeric_limits<double>::infinity();
  for (std::size_t a = 0; a < table.n; ++a) {
    const Mask bit = Mask{1} << a;
    const double denom = table[bit] - table[0];
    if (denom <= kRatioCutoff) {
      ++est.skipped;
      continue;
    }
    const Mask rest = subset & ~bit;
    min_ratio = std::min(min_ratio, (table[rest | bit] - table[rest]) / denom);
    ++est.checked;
  }
  est.value = est.checked == 0 ? 0.0 : 1.0 - min_ratio;
  return est;
}

RatioEstimate EmpiricalKappa(SetFunction& f, const IndexSet& subset) {
  const IndexSet s = f.Canonical(subset);
  const std::vector<double> singles = f.Singletons();
  const double f_empty = f.Empty();
  const double f_s = f.Value(s);
  RatioEstimate est;
  double min_ratio = std::numeric_limits<double>::infinity();
  for (std::size_t a = 0; a < f.ground_size(); ++a) {
    const double denom = singles[a] - f_empty;
    if (denom <= kRatioCutoff) {
      ++est.skipped;
      continue;
    }
    double gain;
    if (std::binary_search(s.begin(), s.end(), a)) {
      IndexSet rest = s;
      rest.erase(std::find(rest.begin(), rest.end(), a));
      gain = f_s - f.Value(rest);
    } else {
      IndexSet grown = s;
      grown.push_back(a);
      gain = f.Value(grown) - f_s;
    }
    min_ratio = std::min(min_ratio, gain / denom);
    ++est.checked;
  }
  est.value = est.checked == 0 ? 0.0 : 1.0 - min_ratio;
  return est;
}

RatioEstimate MaxEmpiricalKappa(const SubsetTable& table) {
  RatioEstimate out;
  out.value = -std::numeric_limits<double>::infinity();
  const Mask count = Mask{1} << table.n;
  for (Mask s = 0; s < count; ++s) {
    const RatioEstimate est = EmpiricalKappa(table, s);
    out.value = std::max(out.value, est.value);
    out.checked += est.checked;
    out.skipped += est.skipped;
  }
  return out;
}

namespace {

IndexSet SampleSubset(std::size_t n, std::size_t size, std::mt19937_64& rng) {
  IndexSet pool(n);
  std::iota(pool.begin(), pool.end(), std::size_t{0});
  for (std::size_t i = 0; i < size; ++i) {
    std::uniform_int_distribution<std::size_t> pick(i, n - 1);
    std::swap(pool[i], pool[pick(rng)]);
  }
  pool.resize(size);
  std::sort(pool.begin(), pool.end());
  return pool;
}

// A random (S, a) with a outside S; trial 0 has S = {}.
std::pair<IndexSet, std::size_t> SamplePair(std::size_t n, int trial, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> size_dist(0, n - 1);
  const std::size_t size = trial == 0 ? 0 : size_dist(rng);
  IndexSet s = SampleSubset(n, size, rng);
  IndexSet outside;
  for (std::size_t i = 0; i < n; ++i) {
    if (!std::binary_search(s.begin(), s.end(), i)) outside.push_back(i);
  }
  std::uniform_int_distribution<std::size_t> pick(0, outside.size() - 1);
  return {std::move(s), outside[pick(rng)]};
}

void Record(OracleReport& report, double slack, const Witness& witness) {
  if (report.instances == 0 || slack < report.worst_slack) {
    report.worst_slack = slack;
    if (slack < -report.tolerance) report.witness = witness;
  }
  ++report.instances;
}

void Finish(OracleReport& report) {
  report.pass = report.worst_slack >= -report.tolerance;
  if (report.pass) report.witness.reset();
}

double CrossBound(const Problem& p, const LinearModel<double>& w, std::size_t a) {
  const auto row = static_cast<Eigen::Index>(a);
  const double r = p.train.targets(row) - w.Predict(p.train.features.row(row).transpose());
  return p.lambda * w.SquaredNorm() + r * r;
}

}  // namespace

OracleReport CheckMonotone(SetFunction& f, int trials, std::uint64_t seed) {
  OracleReport report;
  report.property = "monotone";
  report.tolerance = 1e-8;
  const std::size_t n = f.ground_size();
  std::mt19937_64 rng(seed);
  for (int t = 0; t < trials && n > 0; ++t) {
    auto [s, a] = SamplePair(n, t, rng);
    const double gain = f.Marginal(a, s);
    Record(report, gain, {s, {}, a});
  }
  Finish(report);
  return report;
}

OracleReport CheckSandwich(SetFunction& f, int trials, std::uint64_t seed) {
  if (f.options().backend != Backend::kExact) {
    throw Error(ErrorCode::kInvalidArgument, "the sandwich check needs the exact backend");
  }
  OracleReport report;
  report.property = "sandwich";
  report.tolerance = 1e-7;
  const Problem& p = f.problem();
  const std::size_t n = f.ground_size();
  std::mt19937_64 rng(seed);
  for (int t = 0; t < trials && n > 0; ++t) {
    auto [s, a] = SamplePair(n, t, rng);
    IndexSet grown = s;
    grown.push_back(a);
    std::sort(grown.begin(), grown.end());
    const SetFnEntry& small = f.Evaluate(s);
    const SetFnEntry& large = f.Evaluate(grown);
    const double gain = large.value - small.value;

    const LinearModel<double> w_low = SolveInnerLinear(small.state.mu, grown, p);
    const LinearModel<double> w_high = SolveInnerLinear(large.state.mu, s, p, true);
    const double lower = CrossBound(p, w_low, a);
    const double upper = CrossBound(p, w_high, a);
    Record(report, std::min(gain - lower, upper - gain), {s, grown, a});
  }
  Finish(report);
  return report;
}

OracleReport CheckModularBound(SetFunction& f, const IndexSet& s_hat, double alpha,
                               std::size_t max_n) {
  OracleReport report;
  report.property = "modular_bound";
  report.tolerance = 1e-8;
  const SubsetTable table = EnumerateSubsets(f, max_n);
  const ModularBound bound = BuildModularBound(f, s_hat, alpha);
  const Mask count = Mask{1} << table.n;
  for (Mask x = 0; x < count; ++x) {
    const IndexSet xs = MaskToSet(x);
    Record(report, bound(xs) - table[x], {bound.s_hat, xs, std::nullopt});
  }
  Finish(report);
  const double gap = std::abs(bound(bound.s_hat) - bound.f_hat);
  if (gap > 1e-9) {
    report.pass = false;
    report.witness = Witness{bound.s_hat, bound.s_hat, std::nullopt};
  }
  return report;
}

}  // namespace selcon
