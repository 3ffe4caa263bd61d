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

// Run configuration and its INI file form:
//
//   [problem]  lambda, C, delta (a number or "auto"), k, partition, backend, model
//   [trainer]  epochs, batch_size, lr_w, lr_mu, mu_tol, max_outer, seed, hidden_width
//   [selcon]   iterations, alpha_mode, alpha, alpha_floor, seed, early_stop
//
// Keys that are absent keep their current value.

#ifndef SELCON_CONFIG_HPP_
#define SELCON_CONFIG_HPP_

#include <cstdint>
#include <optional>
#include <string>

#include "selcon/dataset.hpp"
#include "selcon/selcon.hpp"

namespace selcon {

struct RunConfig {
  double lambda = 1.0;
  double C = 1.0;
  std::optional<double> delta;  // nullopt selects 0.3 x the full-data error
  std::size_t k = 10;
  PartitionMode partition = PartitionMode::kSingle;
  SetFnOptions setfn;
  SelconConfig selcon;
  SplitSpec split;

  // Seeds the trainer, the initial subset and the split together.
  void SetSeed(std::uint64_t seed);
};

std::string ToString(PartitionMode mode);
PartitionMode ParsePartitionMode(const std::string& s);

// Overlays the keys present in `text` (INI) onto `cfg`.
void ApplyIni(const std::string& text, RunConfig& cfg);
void ApplyIniFile(const std::string& path, RunConfig& cfg);

// Applies SELCON_SEED from the environment if set.
void ApplySeedEnv(RunConfig& cfg);

}  // namespace selcon

#endif  // SELCON_CONFIG_HPP_
