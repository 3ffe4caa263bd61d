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

#include "selcon/config.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

#include "selcon/error.hpp"

namespace selcon {

namespace pt = boost::property_tree;

void RunConfig::SetSeed(std::uint64_t seed) {
  setfn.trainer.seed = seed;
  selcon.seed = seed;
  split.seed = seed;
}

std::string ToString(PartitionMode mode) {
  return mode == PartitionMode::kSingle ? "single" : "by_group";
}

PartitionMode ParsePartitionMode(const std::string& s) {
  if (s == "single") return PartitionMode::kSingle;
  if (s == "by_group") return PartitionMode::kByGroup;
  throw Error(ErrorCode::kInvalidArgument, "unknown partition mode '" + s + "'");
}

namespace {

template <typename T>
void Read(const pt::ptree& tree, const char* key, T& out) {
  const auto value = tree.get_optional<std::string>(key);
  if (!value) return;
  try {
    out = tree.get<T>(key);
  } catch (const pt::ptree_error&) {
    throw Error(ErrorCode::kInvalidArgument, std::string("bad value for '") + key + "'");
  }
}

bool ParseBool(const std::string& s) {
  if (s == "true" || s == "1" || s == "yes" || s == "on") return true;
  if (s == "false" || s == "0" || s == "no" || s == "off") return false;
  throw Error(ErrorCode::kInvalidArgument, "bad boolean '" + s + "'");
}

}  // namespace

void ApplyIni(const std::string& text, RunConfig& cfg) {
  pt::ptree tree;
  std::istringstream in(text);
  try {
    pt::read_ini(in, tree);
  } catch (const pt::ini_parser_error& e) {
    throw Error(ErrorCode::kParseFailure, std::string("config: ") + e.what());
  }

  Read(tree, "problem.lambda", cfg.lambda);
  Read(tree, "problem.C", cfg.C);
  Read(tree, "problem.k", cfg.k);
  if (auto delta = tree.get_optional<std::string>("problem.delta")) {
    if (*delta == "auto") {
      cfg.delta.reset();
    } else {
      double d = 0.0;
      Read(tree, "problem.delta", d);
      cfg.delta = d;
    }
  }
  if (auto s = tree.get_optional<std::string>("problem.partition")) cfg.partition = ParsePartitionMode(*s);
  if (auto s = tree.get_optional<std::string>("problem.backend")) cfg.setfn.backend = ParseBackend(*s);
  if (auto s = tree.get_optional<std::string>("problem.model")) cfg.setfn.model = ParseModelKind(*s);

  TrainerConfig& t = cfg.setfn.trainer;
  Read(tree, "trainer.epochs", t.epochs);
  Read(tree, "trainer.batch_size", t.batch_size);
  Read(tree, "trainer.lr_w", t.lr_w);
  Read(tree, "trainer.lr_mu", t.lr_mu);
  Read(tree, "trainer.mu_tol", t.mu_tol);
  Read(tree, "trainer.max_outer", t.max_outer);
  Read(tree, "trainer.hidden_width", t.hidden_width);
  if (tree.get_optional<std::string>("trainer.seed")) {
    std::uint64_t seed = 0;
    Read(tree, "trainer.seed", seed);
    t.seed = seed;
    cfg.split.seed = seed;
  }

  SelconConfig& s = cfg.selcon;
  Read(tree, "selcon.iterations", s.iterations);
  Read(tree, "selcon.alpha", s.alpha_value);
  Read(tree, "selcon.alpha_floor", s.alpha_floor);
  Read(tree, "selcon.seed", s.seed);
  if (auto v = tree.get_optional<std::string>("selcon.alpha_mode")) s.alpha_mode = ParseAlphaMode(*v);
  if (auto v = tree.get_optional<std::string>("selcon.early_stop")) s.early_stop = ParseBool(*v);
}

void ApplyIniFile(const std::string& path, RunConfig& cfg) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kInvalidArgument, "cannot open config file " + path);
  std::ostringstream text;
  text << in.rdbuf();
  ApplyIni(text.str(), cfg);
}

void ApplySeedEnv(RunConfig& cfg) {
  const char* env = std::getenv("SELCON_SEED");
  if (env == nullptr || *env == '\0') return;
  char* end = nullptr;
  const unsigned long long seed = std::strtoull(env, &end, 10);
  if (*end != '\0') throw Error(ErrorCode::kInvalidArgument, "SELCON_SEED must be an integer");
  cfg.SetSeed(seed);
}

}  // namespace selcon
