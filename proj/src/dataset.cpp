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
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <numeric>
#include <random>
#include <sstream>

#include "selcon/error.hpp"

namespace selcon {

namespace {

// Splits one CSV record. Double-quoted fields may contain commas; a doubled
// quote inside a quoted field is a literal quote.
std::vector<std::string> SplitRecord(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          field.push_back('"');
          ++i;
        } else {
          quoted = false;
        }
      } else {
        field.push_back(c);
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.push_back(std::move(field));
      field.clear();
    } else {
      field.push_back(c);
    }
  }
  fields.push_back(std::move(field));
  return fields;
}

std::string QuoteIfNeeded(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

std::string_view Trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
    s.remove_suffix(1);
  return s;
}

double ParseReal(std::string_view cell, std::size_t row, std::size_t col) {
  cell = Trim(cell);
  if (!cell.empty() && cell.front() == '+') cell.remove_prefix(1);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), value);
  if (cell.empty() || ec != std::errc() || ptr != cell.data() + cell.size()) {
    throw Error(ErrorCode::kParseFailure, "row " + std::to_string(row) + ", column " +
                                              std::to_string(col) + ": '" +
                                              std::string(cell) + "'");
  }
  if (!std::isfinite(value)) {
    throw Error(ErrorCode::kNonFiniteValue,
                "row " + std::to_string(row) + ", column " + std::to_string(col));
  }
  return value;
}

std::string FormatReal(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

void Dataset::Validate() const {
  const auto n = targets.size();
  if (features.rows() != n || static_cast<Eigen::Index>(ids.size()) != n) {
    throw Error(ErrorCode::kInvalidArgument, "row counts of features/targets/ids differ");
  }
  if (!features.allFinite() || !targets.allFinite()) {
    throw Error(ErrorCode::kNonFiniteValue, "dataset contains non-finite entries");
  }
  if (groups) {
    if (static_cast<Eigen::Index>(groups->size()) != n) {
      throw Error(ErrorCode::kInvalidArgument, "group labels length differs from rows");
    }
    for (int g : *groups) {
      if (g < 0 || static_cast<std::size_t>(g) >= group_labels.size()) {
        throw Error(ErrorCode::kInvalidArgument, "group id out of range");
      }
    }
  }
}

Dataset Dataset::Subset(const IndexSet& rows) const {
  Dataset out;
  out.features.resize(static_cast<Eigen::Index>(rows.size()), features.cols());
  out.targets.resize(static_cast<Eigen::Index>(rows.size()));
  out.ids.reserve(rows.size());
  if (groups) out.groups.emplace().reserve(rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const auto src = static_cast<Eigen::Index>(rows[r]);
    out.features.row(static_cast<Eigen::Index>(r)) = features.row(src);
    out.targets(static_cast<Eigen::Index>(r)) = targets(src);
    out.ids.push_back(ids[rows[r]]);
    if (groups) out.groups->push_back((*groups)[rows[r]]);
  }
  out.group_labels = group_labels;
  out.feature_names = feature_names;
  out.target_name = target_name;
  out.group_name = group_name;
  return out;
}

Dataset ParseCsv(const std::string& text, const std::string& target_column,
                 const std::optional<std::string>& group_column) {
  std::istringstream in(text);
  std::string line;
  std::vector<std::string> header;
  while (std::getline(in, line)) {
    if (!Trim(line).empty()) {
      header = SplitRecord(line);
      break;
    }
  }
  if (header.empty()) throw Error(ErrorCode::kEmptyFile, "no header row");
  for (auto& h : header) h = std::string(Trim(h));

  auto find_column = [&](const std::string& name) -> std::size_t {
    const auto it = std::find(header.begin(), header.end(), name);
    if (it == header.end()) throw Error(ErrorCode::kMissingColumn, "'" + name + "'");
    return static_cast<std::size_t>(it - header.begin());
  };
  const std::size_t target_col = find_column(target_column);
  std::optional<std::size_t> group_col;
  if (group_column) group_col = find_column(*group_column);

  Dataset data;
  data.target_name = target_column;
  std::vector<std::size_t> feature_cols;
  for (std::size_t c = 0; c < header.size(); ++c) {
    if (c == target_col || (group_col && c == *group_col)) continue;
    feature_cols.push_back(c);
    data.feature_names.push_back(header[c]);
  }

  std::vector<double> feature_values;
  std::vector<double> target_values;
  std::vector<int> group_ids;
  std::map<std::string, int> label_to_id;
  std::size_t row = 0;
  while (std::getline(in, line)) {
    if (Trim(line).empty()) continue;
    const auto cells = SplitRecord(line);
    if (cells.size() != header.size()) {
      throw Error(ErrorCode::kParseFailure, "row " + std::to_string(row) + " has " +
                                                std::to_string(cells.size()) +
                                                " cells, expected " +
                                                std::to_string(header.size()));
    }
    for (std::size_t c : feature_cols) feature_values.push_back(ParseReal(cells[c], row, c));
    target_values.push_back(ParseReal(cells[target_col], row, target_col));
    if (group_col) {
      const std::string label(Trim(cells[*group_col]));
      auto [it, inserted] =
          label_to_id.emplace(label, static_cast<int>(data.group_labels.size()));
      if (inserted) data.group_labels.push_back(label);
      group_ids.push_back(it->second);
    }
    ++row;
  }
  if (row == 0) throw Error(ErrorCode::kEmptyFile, "no data rows");

  const auto n = static_cast<Eigen::Index>(row);
  const auto d = static_cast<Eigen::Index>(feature_cols.size());
  data.features = Eigen::Map<const Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic,
                                                 Eigen::RowMajor>>(feature_values.data(), n, d);
  data.targets = Eigen::Map<const Eigen::VectorXd>(target_values.data(), n);
  data.ids.resize(row);
  std::iota(data.ids.begin(), data.ids.end(), std::size_t{0});
  if (group_col) {
    data.groups = std::move(group_ids);
    data.group_name = *group_column;
  }
  return data;
}

Dataset LoadCsv(const std::string& path, const std::string& target_column,
                const std::optional<std::string>& group_column) {
  std::ifstream file(path, std::ios::binary);
  if (!file) throw Error(ErrorCode::kEmptyFile, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << file.rdbuf();
  return ParseCsv(buf.str(), target_column, group_column);
}

std::string ToCsv(const Dataset& data) {
  std::string out;
  for (const auto& name : data.feature_names) out += QuoteIfNeeded(name) + ",";
  // Unnamed features (e.g. from generation) get positional names.
  for (std::size_t c = data.feature_names.size(); c < data.dim(); ++c) {
    out += "f" + std::to_string(c) + ",";
  }
  out += QuoteIfNeeded(data.target_name);
  if (data.groups) out += "," + QuoteIfNeeded(data.group_name.empty() ? "group" : data.group_name);
  out += "\n";
  for (Eigen::Index r = 0; r < data.features.rows(); ++r) {
    for (Eigen::Index c = 0; c < data.features.cols(); ++c) {
      out += FormatReal(data.features(r, c)) + ",";
    }
    out += FormatReal(data.targets(r));
    if (data.groups) {
      out += "," + QuoteIfNeeded(data.group_labels[static_cast<std::size_t>(
                       (*data.groups)[static_cast<std::size_t>(r)])]);
    }
    out += "\n";
  }
  return out;
}

void SaveCsv(const Dataset& data, const std::string& path) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw Error(ErrorCode::kInvalidArgument, "cannot write '" + path + "'");
  file << ToCsv(data);
}

Splits Split(const Dataset& data, const SplitSpec& spec) {
  const double fracs[] = {spec.train_frac, spec.val_frac, spec.test_frac};
  for (double f : fracs) {
    if (!(f > 0.0 && f < 1.0)) {
      throw Error(ErrorCode::kInvalidArgument, "split fractions must lie in (0, 1)");
    }
  }
  if (std::abs(spec.train_frac + spec.val_frac + spec.test_frac - 1.0) > 1e-12) {
    throw Error(ErrorCode::kInvalidArgument, "split fractions must sum to 1");
  }
  const std::size_t n = data.size();
  // The 1e-9 guards against products such as 0.29 * 100 landing just below
  // an integer.
  const auto n_val = static_cast<std::size_t>(std::floor(static_cast<double>(n) * spec.val_frac + 1e-9));
  const auto n_test = static_cast<std::size_t>(std::floor(static_cast<double>(n) * spec.test_frac + 1e-9));
  if (n_val == 0 || n_test == 0 || n_val + n_test >= n) {
    throw Error(ErrorCode::kEmptySplit, "n=" + std::to_string(n) +
                                            " yields val=" + std::to_string(n_val) +
                                            ", test=" + std::to_string(n_test));
  }
  const std::size_t n_train = n - n_val - n_test;

  IndexSet order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::mt19937_64 rng(spec.seed);
  std::shuffle(order.begin(), order.end(), rng);

  const auto slice = [&](std::size_t from, std::size_t count) {
    return data.Subset(IndexSet(order.begin() + static_cast<std::ptrdiff_t>(from),
                                order.begin() + static_cast<std::ptrdiff_t>(from + count)));
  };
  return Splits{slice(0, n_train), slice(n_train, n_val), slice(n_train + n_val, n_test)};
}

ValidationPartition PartitionValidation(const Dataset& val, PartitionMode mode, double delta) {
  if (!(delta >= 0.0)) throw Error(ErrorCode::kInvalidArgument, "delta must be >= 0");
  if (val.size() == 0) throw Error(ErrorCode::kEmptyDataset, "empty validation set");
  ValidationPartition part;
  part.delta = delta;
  if (mode == PartitionMode::kSingle) {
    IndexSet all(val.size());
    std::iota(all.begin(), all.end(), std::size_t{0});
    part.subsets.push_back(std::move(all));
    return part;
  }
  if (!val.groups) throw Error(ErrorCode::kMissingGroups, "validation data has no group column");
  std::map<int, IndexSet> by_group;
  for (std::size_t j = 0; j < val.size(); ++j) by_group[(*val.groups)[j]].push_back(j);
  for (auto& [g, rows] : by_group) part.subsets.push_back(std::move(rows));
  return part;
}

Dataset OffsetAugment(const Dataset& data, double c) {
  if (!std::isfinite(c)) throw Error(ErrorCode::kNonFiniteValue, "offset must be finite");
  Dataset out = data;
  out.features.conservativeResize(Eigen::NoChange, data.features.cols() + 1);
  out.features.col(data.features.cols()).setOnes();
  out.targets.array() += c;
  if (out.feature_names.size() == data.dim()) out.feature_names.push_back("const");
  return out;
}

SyntheticTruth SyntheticGroundTruth(const SyntheticSpec& spec) {
  // Drawn from a stream separate from the per-row draws so the truth does not
  // depend on n.
  std::mt19937_64 rng(spec.seed ^ 0x9e3779b97f4a7c15ULL);
  std::uniform_real_distribution<double> weight(-2.0, 2.0);
  std::normal_distribution<double> bias(0.0, 1.0);
  SyntheticTruth truth;
  truth.weights.resize(static_cast<Eigen::Index>(spec.d));
  for (auto& w : truth.weights) w = weight(rng);
  truth.group_bias.resize(static_cast<Eigen::Index>(spec.n_groups));
  for (auto& b : truth.group_bias) b = bias(rng);
  return truth;
}

Dataset GenerateSynthetic(const SyntheticSpec& spec) {
  if (spec.n == 0 || spec.d == 0) {
    throw Error(ErrorCode::kInvalidArgument, "synthetic data needs n >= 1 and d >= 1");
  }
  if (!(spec.noise_sd >= 0.0)) throw Error(ErrorCode::kInvalidArgument, "noise_sd must be >= 0");
  const SyntheticTruth truth = SyntheticGroundTruth(spec);
  const auto n = static_cast<Eigen::Index>(spec.n);
  const auto d = static_cast<Eigen::Index>(spec.d);

  std::mt19937_64 rng(spec.seed);
  std::uniform_real_distribution<double> feature(-1.0, 1.0);
  std::normal_distribution<double> noise(0.0, 1.0);

  Dataset data;
  data.features.resize(n, d);
  data.targets.resize(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index c = 0; c < d; ++c) data.features(i, c) = feature(rng);
    double y = data.features.row(i).dot(truth.weights);
    if (spec.n_groups > 0) y += truth.group_bias(i % static_cast<Eigen::Index>(spec.n_groups));
    const double eps = noise(rng);
    data.targets(i) = y + spec.noise_sd * eps;
  }
  data.targets.array() += 1.0 - data.targets.minCoeff();

  for (Eigen::Index c = 0; c < d; ++c) data.feature_names.push_back("f" + std::to_string(c));
  data.ids.resize(spec.n);
  std::iota(data.ids.begin(), data.ids.end(), std::size_t{0});
  if (spec.n_groups > 0) {
    data.group_name = "group";
    std::vector<int> groups(spec.n);
    for (std::size_t i = 0; i < spec.n; ++i) groups[i] = static_cast<int>(i % spec.n_groups);
    data.groups = std::move(groups);
    // Labels are assigned in first-appearance order, which is 0..G-1 here,
    // except when n < G (only the groups that actually appear get ids).
    const std::size_t present = std::min(spec.n, spec.n_groups);
    for (std::size_t g = 0; g < present; ++g) data.group_labels.push_back("g" + std::to_string(g));
  }
  return data;
}

}  // namespace selcon
