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

#include "selcon/error.hpp"

namespace selcon {

std::string_view ToString(ErrorCode code) {
  switch (code) {
    case ErrorCode::kMissingColumn: return "MissingColumn";
    case ErrorCode::kParseFailure: return "ParseFailure";
    case ErrorCode::kNonFiniteValue: return "NonFiniteValue";
    case ErrorCode::kEmptyFile: return "EmptyFile";
    case ErrorCode::kEmptySplit: return "EmptySplit";
    case ErrorCode::kMissingGroups: return "MissingGroups";
    case ErrorCode::kDimensionMismatch: return "DimensionMismatch";
    case ErrorCode::kSingularSystem: return "SingularSystem";
    case ErrorCode::kDivergenceDetected: return "DivergenceDetected";
    case ErrorCode::kElementAlreadyPresent: return "ElementAlreadyPresent";
    case ErrorCode::kZeroTarget: return "ZeroTarget";
    case ErrorCode::kInvalidAlpha: return "InvalidAlpha";
    case ErrorCode::kInvalidK: return "InvalidK";
    case ErrorCode::kTooLarge: return "TooLarge";
    case ErrorCode::kEmptyDataset: return "EmptyDataset";
    case ErrorCode::kNeedTwoGroups: return "NeedTwoGroups";
    case ErrorCode::kNonPositiveTime: return "NonPositiveTime";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace selcon
