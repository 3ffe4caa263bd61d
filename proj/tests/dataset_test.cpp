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

#include "selcon/dataset.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <set>

#include "gtest/gtest.h"
#include "selcon/error.hpp"

namespace selcon {
namespace {

ErrorCode CodeOf(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::kInvalidArgument;
}

TEST(LoadCsvTest, ParsesThreeRows) {
  const Dataset d = ParseCsv("f0,f1,y\n1,2,3\n4,5,6\n7,8,9\n", "y");
  EXPECT_EQ(d.size(), 3u);
  EXPECT_EQ(d.dim(), 2u);
  EXPECT_DOUBLE_EQ(d.features(2, 1), 8.0);
  EXPECT_DOUBLE_EQ(d.targets(1), 6.0);
  EXPECT_EQ(d.ids, (std::vector<std::size_t>{0, 1, 2}));
  EXPECT_FALSE(d.groups.has_value());
}

TEST(LoadCsvTest, TargetColumnAnywhere) {
  const Dataset d = ParseCsv("y,a,b\n1,2,3\n", "y");
  EXPECT_EQ(d.dim(), 2u);
  EXPECT_DOUBLE_EQ(d.targets(0), 1.0);
  EXPECT_DOUBLE_EQ(d.features(0, 0), 2.0);
}

TEST(LoadCsvTest, GroupColumnExcludedFromFeatures) {
  const Dataset d = ParseCsv("f0,g,y\n1,b,3\n4,a,6\n7,b,9\n", "y", std::string("g"));
  EXPECT_EQ(d.dim(), 1u);
  ASSERT_TRUE(d.groups.has_value());
  EXPECT_EQ(*d.groups, (std::vector<int>{0, 1, 0}));
  EXPECT_EQ(d.group_labels, (std::vector<std::string>{"b", "a"}));
}

TEST(LoadCsvTest, Errors) {
  EXPECT_EQ(CodeOf([] { ParseCsv("f0,f1\n1,2\n", "y"); }), ErrorCode::kMissingColumn);
  EXPECT_EQ(CodeOf([] { ParseCsv("f0,y\nNaN,2\n", "y"); }), ErrorCode::kNonFiniteValue);
  EXPECT_EQ(CodeOf([] { ParseCsv("f0,y\n1,inf\n", "y"); }), ErrorCode::kNonFiniteValue);
  EXPECT_EQ(CodeOf([] { ParseCsv("f0,y\n1,abc\n", "y"); }), ErrorCode::kParseFailure);
  EXPECT_EQ(CodeOf([] { ParseCsv("", "y"); }), ErrorCode::kEmptyFile);
  EXPECT_EQ(CodeOf([] { ParseCsv("f0,y\n1,2\n", "y", std::string("g")); }),
            ErrorCode::kMissingColumn);
  EXPECT_EQ(CodeOf([] { LoadCsv("/nonexistent/file.csv", "y"); }), ErrorCode::kEmptyFile);
}

TEST(LoadCsvTest, RoundTripsThroughFile) {
  SyntheticSpec spec;
  spec.n = 20;
  spec.d = 3;
  spec.n_groups = 3;
  const Dataset d = GenerateSynthetic(spec);
  const auto path = std::filesystem::temp_directory_path() / "selcon_dataset_roundtrip.csv";
  SaveCsv(d, path.string());
  const Dataset back = LoadCsv(path.string(), "y", std::string("group"));
  std::filesystem::remove(path);
  EXPECT_EQ(back.features, d.features);
  EXPECT_EQ(back.targets, d.targets);
  EXPECT_EQ(*back.groups, *d.groups);
}

Dataset Rows(std::size_t n) {
  SyntheticSpec spec;
  spec.n = n;
  return GenerateSynthetic(spec);
}

TEST(SplitTest, PaperFractions) {
  SplitSpec spec;
  spec.seed = 7;
  const Splits s = Split(Rows(100), spec);
  EXPECT_EQ(s.train.size(), 89u);
  EXPECT_EQ(s.val.size(), 1u);
  EXPECT_EQ(s.test.size(), 10u);
  std::set<std::size_t> all;
  for (const Dataset* part : {&s.train, &s.val, &s.test}) all.insert(part->ids.begin(), part->ids.end());
  EXPECT_EQ(all.size(), 100u);
}

TEST(SplitTest, EmptyValidationRejected) {
  EXPECT_EQ(CodeOf([] { Split(Rows(10), SplitSpec{}); }), ErrorCode::kEmptySplit);
}

TEST(SplitTest, Deterministic) {
  SplitSpec spec;
  spec.seed = 3;
  const Splits a = Split(Rows(200), spec);
  const Splits b = Split(Rows(200), spec);
  EXPECT_EQ(a.train.ids, b.train.ids);
  EXPECT_EQ(a.val.ids, b.val.ids);
  EXPECT_EQ(a.test.ids, b.test.ids);
  spec.seed = 4;
  EXPECT_NE(Split(Rows(200), spec).train.ids, a.train.ids);
}

TEST(SplitTest, FractionsMustSumToOne) {
  SplitSpec spec;
  spec.train_frac = 0.5;
  EXPECT_EQ(CodeOf([&] { Split(Rows(200), spec); }), ErrorCode::kInvalidArgument);
}

TEST(PartitionTest, Single) {
  const ValidationPartition p = PartitionValidation(Rows(6), PartitionMode::kSingle, 0.5);
  ASSERT_EQ(p.num_groups(), 1u);
  EXPECT_EQ(p.subsets[0], (IndexSet{0, 1, 2, 3, 4, 5}));
  EXPECT_DOUBLE_EQ(p.delta, 0.5);
}

TEST(PartitionTest, ByGroup) {
  Dataset d = Rows(6);
  d.groups = std::vector<int>{0, 0, 1, 1, 2, 2};
  d.group_labels = {"a", "b", "c"};
  const ValidationPartition p = PartitionValidation(d, PartitionMode::kByGroup, 0.1);
  ASSERT_EQ(p.num_groups(), 3u);
  EXPECT_EQ(p.subsets[0], (IndexSet{0, 1}));
  EXPECT_EQ(p.subsets[1], (IndexSet{2, 3}));
  EXPECT_EQ(p.subsets[2], (IndexSet{4, 5}));
}

TEST(PartitionTest, ByGroupSkipsAbsentGroups) {
  Dataset d = Rows(4);
  d.groups = std::vector<int>{2, 0, 2, 0};
  d.group_labels = {"a", "b", "c"};
  const ValidationPartition p = PartitionValidation(d, PartitionMode::kByGroup, 0.1);
  ASSERT_EQ(p.num_groups(), 2u);
  EXPECT_EQ(p.subsets[0], (IndexSet{1, 3}));
  EXPECT_EQ(p.subsets[1], (IndexSet{0, 2}));
}

TEST(PartitionTest, Errors) {
  EXPECT_EQ(CodeOf([] { PartitionValidation(Rows(4), PartitionMode::kByGroup, 0.1); }),
            ErrorCode::kMissingGroups);
  EXPECT_EQ(CodeOf([] { PartitionValidation(Rows(4), PartitionMode::kSingle, -1.0); }),
            ErrorCode::kInvalidArgument);
}

TEST(OffsetAugmentTest, ShiftsTargets) {
  Dataset d;
  d.features = Eigen::MatrixXd::Ones(2, 1);
  d.targets = Eigen::Vector2d(1.0, 2.0);
  d.ids = {0, 1};
  const Dataset out = OffsetAugment(d, 8.0);
  EXPECT_DOUBLE_EQ(out.targets(0), 9.0);
  EXPECT_DOUBLE_EQ(out.targets(1), 10.0);
  EXPECT_DOUBLE_EQ(out.targets.maxCoeff() / out.targets.minCoeff(), 10.0 / 9.0);
}

TEST(OffsetAugmentTest, AppendsConstantColumn) {
  Dataset d;
  d.features = Eigen::MatrixXd::Constant(1, 1, 3.0);
  d.targets = Eigen::VectorXd::Constant(1, 2.0);
  d.ids = {0};
  const Dataset out = OffsetAugment(d, 5.0);
  ASSERT_EQ(out.dim(), 2u);
  EXPECT_DOUBLE_EQ(out.features(0, 0), 3.0);
  EXPECT_DOUBLE_EQ(out.features(0, 1), 1.0);
  const Dataset same = OffsetAugment(d, 0.0);
  EXPECT_EQ(same.targets, d.targets);
  EXPECT_EQ(same.dim(), 2u);
}

TEST(SyntheticTest, Deterministic) {
  SyntheticSpec spec;
  spec.n = 8;
  spec.noise_sd = 0.0;
  EXPECT_EQ(ToCsv(GenerateSynthetic(spec)), ToCsv(GenerateSynthetic(spec)));
}

TEST(SyntheticTest, GroupsCycle) {
  SyntheticSpec spec;
  spec.n = 10;
  spec.n_groups = 4;
  const Dataset d = GenerateSynthetic(spec);
  for (std::size_t i = 0; i < d.size(); ++i) EXPECT_EQ((*d.groups)[i], static_cast<int>(i % 4));
  EXPECT_EQ(d.num_groups(), 4u);
  EXPECT_DOUBLE_EQ(d.targets.minCoeff(), 1.0);
}

TEST(SyntheticTest, NoiselessResidualIsGroupBias) {
  SyntheticSpec spec;
  spec.n = 12;
  spec.d = 3;
  spec.n_groups = 3;
  spec.noise_sd = 0.0;
  spec.seed = 5;
  const Dataset d = GenerateSynthetic(spec);
  const SyntheticTruth truth = SyntheticGroundTruth(spec);
  const Eigen::VectorXd residual = d.targets - d.features * truth.weights;
  // A common shift remains; the pattern across rows is the group bias.
  const double shift = residual(0) - truth.group_bias(0);
  for (Eigen::Index i = 0; i < residual.size(); ++i) {
    EXPECT_NEAR(residual(i) - truth.group_bias(i % 3), shift, 1e-12);
  }
}

TEST(DatasetTest, SubsetCarriesIds) {
  const Dataset d = Rows(5);
  const Dataset s = d.Subset({4, 1});
  EXPECT_EQ(s.ids, (std::vector<std::size_t>{4, 1}));
  EXPECT_EQ(s.features.row(0), d.features.row(4));
}

}  // namespace
}  // namespace selcon
