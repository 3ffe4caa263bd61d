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

// The `selcon` command line: gen, select, verify, bench and fairness.

#ifndef SELCON_CLI_HPP_
#define SELCON_CLI_HPP_

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "selcon/config.hpp"
#include "selcon/dual.hpp"

namespace selcon {

enum ExitCode : int {
  kExitOk = 0,
  kExitRuntime = 1,
  kExitUsage = 2,
  kExitVerifyFailed = 3,
};

// Exit status for a library error: precondition and input problems map to
// kExitUsage, the rest to kExitRuntime.
int ExitCodeFor(ErrorCode code);

struct PreparedProblem {
  Problem problem;
  std::optional<Dataset> test;
  bool delta_auto = false;
};

// Builds the problem from loaded data. Without `val` the data is split with
// cfg.split; an absent cfg.delta is resolved to 0.3 x the mean group error of
// the full-data model trained with C = 0.
PreparedProblem Prepare(const Dataset& data, const std::optional<Dataset>& val,
                        const RunConfig& cfg);

// Runs the command line; `args` excludes the program name.
int RunCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace selcon

#endif  // SELCON_CLI_HPP_
