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

// Comparison methods that share the SelectionResult schema.

#ifndef SELCON_BASELINES_HPP_
#define SELCON_BASELINES_HPP_

#include <cstdint>

#include "selcon/selcon.hpp"

namespace selcon {

// Uniform k-subset without replacement, sorted. Throws kInvalidK if k > n.
IndexSet RandomSubset(std::size_t n, std::size_t k, std::uint64_t seed);

// S = D trained with C = 0.
SelectionResult FullSelection(const Problem& problem, const SetFnOptions& options);

// S = D under the configured constraints.
SelectionResult FullWithConstraints(SetFunction& f);

// A random k-subset trained with C = 0.
SelectionResult RandomSelection(const Problem& problem, const SetFnOptions& options,
                                std::size_t k, std::uint64_t seed);

SelectionResult RandomWithConstraints(SetFunction& f, std::size_t k, std::uint64_t seed);

}  // namespace selcon

#endif  // SELCON_BASELINES_HPP_
