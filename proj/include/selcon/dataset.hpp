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

// Tabular regression data: CSV ingestion, synthetic generation, seeded
// splitting, validation partitioning and the offset transform that adds a
// constant feature.

#ifndef SELCON_DATASET_HPP_
#define SELCON_DATASET_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include <Eigen/Dense>

namespace selcon {

using IndexSet = std::vector<std::size_t>;

struct Dataset {
  Eigen::MatrixXd features;  // n x d
  Eigen::VectorXd targets;   // n
  // Dense group ids in [0, group_labels.size()), assigned by first appearance.
  std::optional<std::vector<int>> groups;
  std::vector<std::string> group_labels;
  // Row ids in the dataset this one was derived from (0..n-1 when loaded).
  std::vector<std::size_t> ids;

  std::vector<std::string> feature_names;
  std::string target_name = "y";
  std::string group_name;

  std::size_t size() const { return static_cast<std::size_t>(targets.size()); }
  std::size_t dim() const { return static_cast<std::size_t>(features.cols()); }
  std::size_t num_groups() const { return group_labels.size(); }

  // Throws ErrorCode::kInvalidArgument / kNonFiniteValue on a broken invariant.
  void Validate() const;

  // Rows `rows` (in that order); ids are carried over from this dataset.
  Dataset Subset(const IndexSet& rows) const;
};

struct ValidationPartition {
  std::vector<IndexSet> subsets;
  double delta = 0.0;

  std::size_t num_groups() const { return subsets.size(); }
};

struct SplitSpec {
  double train_frac = 0.89;
  double val_frac = 0.01;
  double test_frac = 0.10;
  std::uint64_t seed = 0;
};

struct Splits {
  Dataset train;
  Dataset val;
  Dataset test;
};

enum class PartitionMode { kSingle, kByGroup };

Dataset LoadCsv(const std::string& path, const std::string& target_column,
                const std::optional<std::string>& group_column = std::nullopt);
Dataset ParseCsv(const std::string& text, const std::string& target_column,
                 const std::optional<std::string>& group_column = std::nullopt);

// Writes reals with 17 significant digits so LoadCsv(SaveCsv(d)) == d.
std::string ToCsv(const Dataset& data);
void SaveCsv(const Dataset& data, const std::string& path);

// Seeded shuffle, then contiguous slices. Val and test sizes are floored;
// the remainder goes to train.
Splits Split(const Dataset& data, const SplitSpec& spec);

ValidationPartition PartitionValidation(const Dataset& val, PartitionMode mode,
                                        double delta);

// y -> y + c and a trailing constant-1 feature column.
Dataset OffsetAugment(const Dataset& data, double c);

struct SyntheticSpec {
  std::size_t n = 100;
  std::size_t d = 2;
  double noise_sd = 0.1;
  std::size_t n_groups = 0;
  std::uint64_t seed = 1;
};

// The ground-truth parameters used by GenerateSynthetic for a given spec.
struct SyntheticTruth {
  Eigen::VectorXd weights;
  Eigen::VectorXd group_bias;  // one entry per group; empty when ungrouped
};

SyntheticTruth SyntheticGroundTruth(const SyntheticSpec& spec);

// Features uniform in [-1, 1]; y = x.w + bias[group] + N(0, noise_sd^2), then
// every target is shifted by the same constant so that min(y) == 1.
Dataset GenerateSynthetic(const SyntheticSpec& spec);

}  // namespace selcon

#endif  // SELCON_DATASET_HPP_
