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

#include "selcon/baselines.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <random>
#include <string>
#include <utility>

#include "selcon/error.hpp"

namespace selcon {

IndexSet RandomSubset(std::size_t n, std::size_t k, std::uint64_t seed) {
  if (k > n) {
    throw Error(ErrorCode::kInvalidK,
                "k = " + std::to_string(k) + " exceeds n = " + std::to_string(n));
  }
  IndexSet pool(n);
  std::iota(pool.begin(), pool.end(), std::size_t{0});
  std::mt19937_64 rng(seed);
  // Partial Fisher-Yates with an explicit bounded draw, so the sample does
  // not depend on the standard library's distribution implementation.
  for (std::size_t i = 0; i < k; ++i) {
    const std::size_t span = n - i;
    const std::uint64_t limit = rng.max() - (rng.max() % span + 1) % span;
    std::uint64_t draw = rng();
    while (draw > limit) draw = rng();
    std::swap(pool[i], pool[i + static_cast<std::size_t>(draw % span)]);
  }
  pool.resize(k);
  std::sort(pool.begin(), pool.end());
  return pool;
}

namespace {

SelectionResult Single(SetFunction& f, IndexSet subset, const char* method) {
  const auto start = std::chrono::steady_clock::now();
  SelectionResult r;
  r.method = method;
  const SetFnEntry& entry = f.Evaluate(subset);
  r.selected = f.Canonical(std::move(subset));
  r.f_value = entry.value;
  r.state = entry.state;
  r.trace.push_back({0, entry.value, SubsetHash(r.selected)});
  r.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

IndexSet Everything(std::size_t n) {
  IndexSet all(n);
  std::iota(all.begin(), all.end(), std::size_t{0});
  return all;
}

}  // namespace

SelectionResult FullSelection(const Problem& problem, const SetFnOptions& options) {
  Problem unconstrained = problem;
  unconstrained.C = 0.0;
  SetFunction f(std::move(unconstrained), options);
  return Single(f, Everything(f.ground_size()), "full");
}

SelectionResult FullWithConstraints(SetFunction& f) {
  return Single(f, Everything(f.ground_size()), "full_constrained");
}

SelectionResult RandomSelection(const Problem& problem, const SetFnOptions& options,
                                std::size_t k, std::uint64_t seed) {
  Problem unconstrained = problem;
  unconstrained.C = 0.0;
  SetFunction f(std::move(unconstrained), options);
  return Single(f, RandomSubset(f.ground_size(), k, seed), "random");
}

SelectionResult RandomWithConstraints(SetFunction& f, std::size_t k, std::uint64_t seed) {
  return Single(f, RandomSubset(f.ground_size(), k, seed), "random_constrained");
}

}  // namespace selcon
