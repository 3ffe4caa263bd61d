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

#ifndef SELCON_ERROR_HPP_
#define SELCON_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace selcon {

enum class ErrorCode {
  kMissingColumn,
  kParseFailure,
  kNonFiniteValue,
  kEmptyFile,
  kEmptySplit,
  kMissingGroups,
  kDimensionMismatch,
  kSingularSystem,
  kDivergenceDetected,
  kElementAlreadyPresent,
  kZeroTarget,
  kInvalidAlpha,
  kInvalidK,
  kTooLarge,
  kEmptyDataset,
  kNeedTwoGroups,
  kNonPositiveTime,
  kInvalidArgument,
};

std::string_view ToString(ErrorCode code);

// All library failures are reported through this exception; `code()` lets
// callers (the CLI in particular) map failures onto exit codes.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(ToString(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace selcon

#endif  // SELCON_ERROR_HPP_
