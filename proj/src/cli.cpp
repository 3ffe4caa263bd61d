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

#include "selcon/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <limits>
#include <numeric>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "selcon/baselines.hpp"
#include "selcon/bounds.hpp"
#include "selcon/error.hpp"
#include "selcon/metrics.hpp"
#include "selcon/oracle.hpp"
#include "selcon/report.hpp"

namespace selcon {

int ExitCodeFor(ErrorCode code) {
  switch (code) {
    case ErrorCode::kSingularSystem:
    case ErrorCode::kDivergenceDetected:
      return kExitRuntime;
    default:
      return kExitUsage;
  }
}

PreparedProblem Prepare(const Dataset& data, const std::optional<Dataset>& val,
                        const RunConfig& cfg) {
  PreparedProblem out;
  Problem& p = out.problem;
  if (val) {
    p.train = data;
    p.val = *val;
  } else {
    Splits splits = Split(data, cfg.split);
    p.train = std::move(splits.train);
    p.val = std::move(splits.val);
    out.test = std::move(splits.test);
  }
  p.lambda = cfg.lambda;
  p.C = cfg.C;
  p.partition = PartitionValidation(p.val, cfg.partition, cfg.delta.value_or(0.0));
  if (!cfg.delta) {
    out.delta_auto = true;
    const SelectionResult full = FullSelection(p, cfg.setfn);
    p.partition.delta = DefaultDelta(full.state.model, p.val, p.partition);
  }
  return out;
}

namespace {

// Flags shared by the commands that solve a selection problem. Unset
// optionals leave the configuration untouched.
struct ProblemFlags {
  std::string data;
  std::string target = "y";
  std::optional<std::string> group;
  std::optional<std::string> val;
  std::optional<std::string> config;
  std::optional<double> lambda, C, alpha, alpha_floor, lr_w, lr_mu, mu_tol;
  std::optional<double> train_frac, val_frac, test_frac;
  std::optional<std::string> delta, partition, backend, model, alpha_mode;
  std::optional<std::size_t> k;
  std::optional<int> epochs, batch_size, max_outer, iterations, hidden_width;
  std::optional<std::uint64_t> seed;
  bool no_early_stop = false;
  int threads = 1;

  void Register(CLI::App* app, bool need_data) {
    auto* d = app->add_option("--data", data, "CSV file with a header row");
    if (need_data) d->required();
    app->add_option("--target", target, "target column")->capture_default_str();
    app->add_option("--group", group, "group column");
    app->add_option("--val", val, "separate validation CSV (disables splitting)");
    app->add_option("--config", config, "INI config file");
    app->add_option("--lambda", lambda);
    app->add_option("--C", C);
    app->add_option("--delta", delta, "a number or 'auto'");
    app->add_option("--k", k);
    app->add_option("--partition", partition, "single | by_group");
    app->add_option("--backend", backend, "exact | sgd");
    app->add_option("--model", model, "linear | two_layer");
    app->add_option("--epochs", epochs);
    app->add_option("--batch-size", batch_size);
    app->add_option("--lr-w", lr_w);
    app->add_option("--lr-mu", lr_mu);
    app->add_option("--mu-tol", mu_tol);
    app->add_option("--max-outer", max_outer);
    app->add_option("--hidden-width", hidden_width);
    app->add_option("--iterations", iterations);
    app->add_option("--alpha-mode", alpha_mode, "certified | empirical | fixed");
    app->add_option("--alpha", alpha);
    app->add_option("--alpha-floor", alpha_floor);
    app->add_option("--seed", seed);
    app->add_option("--train-frac", train_frac);
    app->add_option("--val-frac", val_frac);
    app->add_option("--test-frac", test_frac);
    app->add_flag("--no-early-stop", no_early_stop);
    app->add_option("--threads", threads, "parallel trainings")->capture_default_str();
  }

  // Defaults, then the config file, then SELCON_SEED, then flags.
  RunConfig Resolve() const {
    RunConfig cfg;
    if (config) ApplyIniFile(*config, cfg);
    ApplySeedEnv(cfg);
    if (lambda) cfg.lambda = *lambda;
    if (C) cfg.C = *C;
    if (delta) {
      if (*delta == "auto") {
        cfg.delta.reset();
      } else {
        try {
          std::size_t used = 0;
          cfg.delta = std::stod(*delta, &used);
          if (used != delta->size()) throw std::invalid_argument("trailing");
        } catch (const std::exception&) {
          throw Error(ErrorCode::kInvalidArgument, "--delta takes a number or 'auto'");
        }
      }
    }
    if (k) cfg.k = *k;
    if (partition) cfg.partition = ParsePartitionMode(*partition);
    if (backend) cfg.setfn.backend = ParseBackend(*backend);
    if (model) cfg.setfn.model = ParseModelKind(*model);
    TrainerConfig& t = cfg.setfn.trainer;
    if (epochs) t.epochs = *epochs;
    if (batch_size) t.batch_size = *batch_size;
    if (lr_w) t.lr_w = *lr_w;
    if (lr_mu) t.lr_mu = *lr_mu;
    if (mu_tol) t.mu_tol = *mu_tol;
    if (max_outer) t.max_outer = *max_outer;
    if (hidden_width) t.hidden_width = *hidden_width;
    if (iterations) cfg.selcon.iterations = *iterations;
    if (alpha_mode) cfg.selcon.alpha_mode = ParseAlphaMode(*alpha_mode);
    if (alpha) {
      cfg.selcon.alpha_value = *alpha;
      if (!alpha_mode) cfg.selcon.alpha_mode = AlphaMode::kFixed;
    }
    if (alpha_floor) cfg.selcon.alpha_floor = *alpha_floor;
    if (seed) cfg.SetSeed(*seed);
    if (train_frac) cfg.split.train_frac = *train_frac;
    if (val_frac) cfg.split.val_frac = *val_frac;
    if (test_frac) cfg.split.test_frac = *test_frac;
    if (no_early_stop) cfg.selcon.early_stop = false;
    if (threads < 1) throw Error(ErrorCode::kInvalidArgument, "--threads must be >= 1");
    cfg.setfn.threads = threads;
    cfg.selcon.k = cfg.k;
    return cfg;
  }

  PreparedProblem Load(const RunConfig& cfg) const {
    const Dataset all = LoadCsv(data, target, group);
    std::optional<Dataset> val_data;
    if (val) val_data = LoadCsv(*val, target, group);
    return Prepare(all, val_data, cfg);
  }
};

void WriteText(const std::string& text, const std::optional<std::string>& path, std::ostream& out) {
  if (!path) {
    out << text;
    return;
  }
  std::ofstream file(*path, std::ios::binary);
  if (!file) throw Error(ErrorCode::kInvalidArgument, "cannot write " + *path);
  file << text;
}

std::string Real(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::vector<std::size_t> OriginalIds(const Dataset& data, const IndexSet& rows) {
  std::vector<std::size_t> ids;
  for (std::size_t r : rows) ids.push_back(data.ids.empty() ? r : data.ids[r]);
  return ids;
}

// Max |f_sgd - f_exact| over the singletons of the linear model; 0 for the
// exact backend.
double MeasureEpsilon(SetFunction& f) {
  if (f.options().backend == Backend::kExact || f.options().model != ModelKind::kLinear) return 0.0;
  SetFnOptions exact = f.options();
  exact.backend = Backend::kExact;
  SetFunction reference(f.problem(), exact);
  const std::vector<double> a = f.Singletons();
  const std::vector<double> b = reference.Singletons();
  double eps = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) eps = std::max(eps, std::abs(a[i] - b[i]));
  return eps;
}

Json ProblemJson(const PreparedProblem& prepared, const RunConfig& cfg) {
  const Problem& p = prepared.problem;
  Json j;
  j["lambda"] = p.lambda;
  j["C"] = p.C;
  j["delta"] = p.partition.delta;
  j["delta_auto"] = prepared.delta_auto;
  j["k"] = cfg.k;
  j["Q"] = p.num_groups();
  j["n_train"] = p.train.size();
  j["n_val"] = p.val.size();
  j["backend"] = ToString(cfg.setfn.backend);
  j["model"] = ToString(cfg.setfn.model);
  j["alpha_mode"] = ToString(cfg.selcon.alpha_mode);
  j["seed"] = cfg.selcon.seed;
  return j;
}

int CmdGen(const SyntheticSpec& spec, const std::optional<std::string>& path, std::ostream& out) {
  if (spec.n < 1 || spec.d < 1 || !(spec.noise_sd >= 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "gen needs n >= 1, d >= 1 and noise >= 0");
  }
  WriteText(ToCsv(GenerateSynthetic(spec)), path, out);
  return kExitOk;
}

int CmdSelect(const ProblemFlags& flags, bool timing, std::optional<double> epsilon,
              const std::optional<std::string>& path, std::ostream& out) {
  const RunConfig cfg = flags.Resolve();
  const PreparedProblem prepared = flags.Load(cfg);
  SetFunction f(prepared.problem, cfg.setfn);
  const SelectionResult result = RunSelcon(f, cfg.selcon);

  Json j;
  j["command"] = "select";
  j["problem"] = ProblemJson(prepared, cfg);
  j["result"] = SelectionToJson(result, timing);
  j["selected_ids"] = OriginalIds(prepared.problem.train, result.selected);
  const GroupErrorReport groups =
      EvaluateGroupErrors(result.state.model, prepared.problem.val, prepared.problem.partition);
  j["group_errors"] = std::vector<double>(groups.errors.data(), groups.errors.data() + groups.errors.size());
  j["constraints_satisfied"] = groups.satisfied;
  if (prepared.test && prepared.test->size() > 0) {
    j["test_mse"] = Mse(result.state.model, *prepared.test);
  }
  if (cfg.setfn.model == ModelKind::kLinear) {
    const Problem& p = prepared.problem;
    try {
      const double eps = epsilon ? *epsilon : MeasureEpsilon(f);
      j["bounds"] = BoundsToJson(
          ComputeBoundReport(p.train, p.val, p.num_groups(), p.lambda, p.C, cfg.k, eps));
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kZeroTarget) throw;
      j["bounds"] = nullptr;
    }
  } else {
    j["bounds"] = nullptr;
  }
  WriteText(j.dump(2) + "\n", path, out);
  return kExitOk;
}

struct VerifyFlags {
  std::size_t n = 12;
  std::size_t d = 2;
  std::size_t groups = 2;
  double noise = 0.3;
  std::uint64_t seed = 1;
  std::string lambda = "min";
  double C = 1.0;
  std::optional<double> delta;
  std::size_t k = 3;
  int trials = 200;
  std::optional<double> alpha;
  std::vector<std::string> properties;
  int threads = 1;
};

const std::vector<std::string>& AllProperties() {
  static const std::vector<std::string> kAll = {"monotone",          "sandwich",
                                                "modular_bound",     "alpha_certificate",
                                                "kappa_certificate", "descent"};
  return kAll;
}

int CmdVerify(VerifyFlags flags, const std::optional<std::string>& path, std::ostream& out) {
  if (const char* env = std::getenv("SELCON_SEED"); env != nullptr && *env != '\0') {
    flags.seed = std::stoull(env);
  }
  if (flags.n < 3) throw Error(ErrorCode::kInvalidArgument, "verify needs n >= 3");
  SyntheticSpec spec;
  spec.n = flags.n;
  spec.d = flags.d;
  spec.n_groups = flags.groups;
  spec.noise_sd = flags.noise;
  spec.seed = flags.seed;
  const Dataset all = GenerateSynthetic(spec);
  const std::size_t n_val = std::max<std::size_t>(flags.groups, flags.n / 3);
  IndexSet train_rows(flags.n - n_val);
  IndexSet val_rows(n_val);
  std::iota(train_rows.begin(), train_rows.end(), std::size_t{0});
  std::iota(val_rows.begin(), val_rows.end(), flags.n - n_val);

  Problem p;
  p.train = all.Subset(train_rows);
  p.val = all.Subset(val_rows);
  p.C = flags.C;
  const PartitionMode mode = flags.groups >= 2 ? PartitionMode::kByGroup : PartitionMode::kSingle;
  p.partition = PartitionValidation(p.val, mode, 0.0);
  const DataConstants consts = ComputeDataConstants(p.train, p.val, p.num_groups());
  if (flags.lambda == "min") {
    p.lambda = LambdaMinLinear(p.C, p.num_groups(), consts);
  } else {
    p.lambda = std::stod(flags.lambda);
  }
  if (flags.delta) {
    p.partition.delta = *flags.delta;
  } else {
    const SelectionResult full = FullSelection(p, SetFnOptions{});
    p.partition.delta = DefaultDelta(full.state.model, p.val, p.partition);
  }
  SetFnOptions options;
  options.threads = flags.threads;
  SetFunction f(p, options);

  std::vector<std::string> wanted = flags.properties.empty() ? AllProperties() : flags.properties;
  for (const std::string& name : wanted) {
    if (std::find(AllProperties().begin(), AllProperties().end(), name) == AllProperties().end()) {
      throw Error(ErrorCode::kInvalidArgument, "unknown property '" + name + "'");
    }
  }
  const bool needs_table =
      std::any_of(wanted.begin(), wanted.end(), [](const std::string& s) {
        return s == "modular_bound" || s == "alpha_certificate" || s == "kappa_certificate";
      });
  std::optional<SubsetTable> table;
  std::optional<RatioEstimate> alpha;
  if (needs_table) {
    table = EnumerateSubsets(f, 12);
    alpha = EmpiricalAlpha(*table);
  }

  Json reports = Json::array();
  bool all_pass = true;
  auto add = [&](const OracleReport& r) {
    all_pass = all_pass && r.pass;
    reports.push_back(OracleToJson(r));
  };
  for (const std::string& name : wanted) {
    if (name == "monotone") {
      add(CheckMonotone(f, flags.trials, flags.seed));
    } else if (name == "sandwich") {
      add(CheckSandwich(f, flags.trials, flags.seed));
    } else if (name == "modular_bound") {
      SelconConfig cfg;
      cfg.k = std::min(flags.k, f.ground_size());
      cfg.alpha_mode = AlphaMode::kFixed;
      cfg.alpha_value = std::clamp(alpha->value, 1e-6, 1.0);
      cfg.seed = flags.seed;
      const SelectionResult r = RunSelcon(f, cfg);
      add(CheckModularBound(f, r.selected, flags.alpha.value_or(cfg.alpha_value)));
    } else if (name == "alpha_certificate") {
      OracleReport r;
      r.property = name;
      r.tolerance = 1e-9;
      r.instances = alpha->checked;
      r.worst_slack = alpha->value - AlphaHatLinear(p.lambda, p.C, p.num_groups(), consts);
      r.pass = r.worst_slack >= -r.tolerance;
      add(r);
    } else if (name == "kappa_certificate") {
      const RatioEstimate kappa = MaxEmpiricalKappa(*table);
      OracleReport r;
      r.property = name;
      r.tolerance = 1e-9;
      r.instances = kappa.checked;
      r.worst_slack =
          KappaHat(p.C, p.num_groups(), consts.y_max, EllStarLinear(p.train, consts.x_max)) -
          kappa.value;
      r.pass = r.worst_slack >= -r.tolerance;
      add(r);
    } else if (name == "descent") {
      OracleReport r;
      r.property = name;
      r.tolerance = 1e-9;
      SelconConfig cfg;
      cfg.k = std::min(flags.k, f.ground_size());
      cfg.alpha_mode = AlphaMode::kEmpirical;
      cfg.early_stop = false;
      for (int run = 0; run < 10; ++run) {
        cfg.seed = flags.seed + static_cast<std::uint64_t>(run);
        const SelectionResult s = RunSelcon(f, cfg);
        for (std::size_t t = 1; t < s.trace.size(); ++t) {
          const double slack = s.trace[t - 1].f_value - s.trace[t].f_value;
          if (r.instances == 0 || slack < r.worst_slack) r.worst_slack = slack;
          ++r.instances;
        }
      }
      r.pass = r.worst_slack >= -r.tolerance;
      add(r);
    }
  }
  WriteText(reports.dump(2) + "\n", path, out);
  return all_pass ? kExitOk : kExitVerifyFailed;
}

std::vector<std::size_t> ParseList(const std::string& text) {
  std::vector<std::size_t> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      out.push_back(std::stoull(item));
    } catch (const std::exception&) {
      throw Error(ErrorCode::kInvalidArgument, "bad list item '" + item + "'");
    }
  }
  if (out.empty()) throw Error(ErrorCode::kInvalidArgument, "empty list");
  return out;
}

int CmdBench(const ProblemFlags& flags, const std::string& ks,
             const std::optional<std::string>& path, std::ostream& out) {
  RunConfig cfg = flags.Resolve();
  const PreparedProblem prepared = flags.Load(cfg);
  if (!prepared.test || prepared.test->size() == 0) {
    throw Error(ErrorCode::kInvalidArgument, "bench needs a test split (omit --val)");
  }
  const Problem& p = prepared.problem;
  const Dataset& test = *prepared.test;
  std::ostringstream csv;
  csv << "method,k,mse,f,seconds,speedup\n";
  auto row = [&](const SelectionResult& r, std::size_t k, double baseline) {
    const double seconds = std::max(r.wall_seconds, 1e-9);
    csv << r.method << ',' << k << ',' << Real(Mse(r.state.model, test)) << ',' << Real(r.f_value)
        << ',' << Real(seconds) << ',' << Real(Speedup(baseline, seconds)) << '\n';
  };

  const SelectionResult full = FullSelection(p, cfg.setfn);
  const double baseline = std::max(full.wall_seconds, 1e-9);
  SetFunction f_full(p, cfg.setfn);
  const SelectionResult full_c = FullWithConstraints(f_full);
  row(full, p.train.size(), baseline);
  row(full_c, p.train.size(), baseline);

  for (std::size_t k : ParseList(ks)) {
    SelconConfig sc = cfg.selcon;
    sc.k = k;
    SetFunction f(p, cfg.setfn);
    row(RunSelcon(f, sc), k, baseline);
    row(RunSelconUnconstrained(p, cfg.setfn, sc), k, baseline);
    row(RandomSelection(p, cfg.setfn, k, sc.seed), k, baseline);
    SetFunction f_random(p, cfg.setfn);
    row(RandomWithConstraints(f_random, k, sc.seed), k, baseline);
  }
  WriteText(csv.str(), path, out);
  return kExitOk;
}

int CmdFairness(const ProblemFlags& flags, const std::optional<std::string>& deltas_text,
                const std::optional<std::string>& path, std::ostream& out) {
  if (!flags.group) throw Error(ErrorCode::kNeedTwoGroups, "fairness needs --group");
  RunConfig cfg = flags.Resolve();
  cfg.partition = PartitionMode::kByGroup;
  const PreparedProblem prepared = flags.Load(cfg);
  const Problem& p = prepared.problem;
  if (p.num_groups() < 2) throw Error(ErrorCode::kNeedTwoGroups, "fewer than two groups in V");
  const Dataset& eval = prepared.test ? *prepared.test : p.val;
  const ValidationPartition eval_partition = PartitionValidation(eval, PartitionMode::kByGroup, 0.0);

  std::vector<double> deltas;
  if (deltas_text) {
    std::stringstream in(*deltas_text);
    std::string item;
    while (std::getline(in, item, ',')) deltas.push_back(std::stod(item));
  } else {
    for (double scale : {4.0, 2.0, 1.0, 0.5}) deltas.push_back(scale * p.partition.delta);
  }
  std::sort(deltas.begin(), deltas.end(), std::greater<>());

  const std::vector<FairnessPoint> points =
      FairnessSweep(p, cfg.setfn, cfg.selcon, deltas, eval, eval_partition);
  Json j;
  j["command"] = "fairness";
  j["Q"] = p.num_groups();
  j["group_labels"] = p.val.group_labels;
  j["k"] = cfg.k;
  j["evaluated_on"] = prepared.test ? "test" : "val";
  Json rows = Json::array();
  for (const FairnessPoint& pt : points) {
    rows.push_back({{"delta", pt.delta},
                    {"selcon", {{"fairness_violation", pt.selcon_violation}, {"mse", pt.selcon_mse}}},
                    {"random_constrained",
                     {{"fairness_violation", pt.random_violation}, {"mse", pt.random_mse}}}});
  }
  j["sweep"] = std::move(rows);
  WriteText(j.dump(2) + "\n", path, out);
  return kExitOk;
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Validation-constrained training subset selection"};
  app.require_subcommand(1);
  std::optional<std::string> out_path;

  SyntheticSpec gen_spec;
  auto* gen = app.add_subcommand("gen", "write a synthetic dataset as CSV");
  gen->add_option("--n", gen_spec.n)->capture_default_str();
  gen->add_option("--d", gen_spec.d)->capture_default_str();
  gen->add_option("--noise", gen_spec.noise_sd)->capture_default_str();
  gen->add_option("--groups", gen_spec.n_groups)->capture_default_str();
  gen->add_option("--seed", gen_spec.seed)->capture_default_str();
  gen->add_option("--out", out_path, "output file (default stdout)");

  ProblemFlags select_flags;
  bool timing = false;
  std::optional<double> epsilon;
  auto* select = app.add_subcommand("select", "run the selection and print a JSON report");
  select_flags.Register(select, true);
  select->add_flag("--timing", timing, "include wall-clock time in the report");
  select->add_option("--epsilon", epsilon, "training error used in the bound report");
  select->add_option("--out", out_path);

  VerifyFlags verify_flags;
  auto* verify = app.add_subcommand("verify", "run the exhaustive property checks");
  verify->add_option("--n", verify_flags.n)->capture_default_str();
  verify->add_option("--d", verify_flags.d)->capture_default_str();
  verify->add_option("--groups", verify_flags.groups)->capture_default_str();
  verify->add_option("--noise", verify_flags.noise)->capture_default_str();
  verify->add_option("--seed", verify_flags.seed)->capture_default_str();
  verify->add_option("--lambda", verify_flags.lambda, "a number or 'min'")->capture_default_str();
  verify->add_option("--C", verify_flags.C)->capture_default_str();
  verify->add_option("--delta", verify_flags.delta);
  verify->add_option("--k", verify_flags.k)->capture_default_str();
  verify->add_option("--trials", verify_flags.trials)->capture_default_str();
  verify->add_option("--alpha", verify_flags.alpha, "alpha for the modular bound check (default: empirical)");
  verify->add_option("--property", verify_flags.properties, "run only these checks");
  verify->add_option("--threads", verify_flags.threads)->capture_default_str();
  verify->add_option("--out", out_path);

  ProblemFlags bench_flags;
  std::string ks = "5,10";
  auto* bench = app.add_subcommand("bench", "compare against the baselines, CSV output");
  bench_flags.Register(bench, true);
  bench->add_option("--ks", ks, "comma-separated subset sizes")->capture_default_str();
  bench->add_option("--out", out_path);

  ProblemFlags fair_flags;
  std::optional<std::string> deltas;
  auto* fairness = app.add_subcommand("fairness", "fairness violation across a delta sweep");
  fair_flags.Register(fairness, true);
  fairness->add_option("--deltas", deltas, "comma-separated deltas (default: multiples of auto)");
  fairness->add_option("--out", out_path);

  std::vector<const char*> argv{"selcon"};
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (gen->parsed()) return CmdGen(gen_spec, out_path, out);
    if (select->parsed()) return CmdSelect(select_flags, timing, epsilon, out_path, out);
    if (verify->parsed()) return CmdVerify(verify_flags, out_path, out);
    if (bench->parsed()) return CmdBench(bench_flags, ks, out_path, out);
    if (fairness->parsed()) return CmdFairness(fair_flags, deltas, out_path, out);
  } catch (const Error& e) {
    err << "error [" << ToString(e.code()) << "]: " << e.what() << "\n";
    return ExitCodeFor(e.code());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitRuntime;
  }
  return kExitUsage;
}

}  // namespace selcon
