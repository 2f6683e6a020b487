// Copyright 2026 The hindex Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "hindex/error.hpp"

namespace hindex {
namespace {

std::string format_message(ErrorCode code, const std::string& message,
                           std::optional<std::size_t> line) {
  std::string out(to_string(code));
  if (line) out += " at line " + std::to_string(*line);
  out += ": ";
  out += message;
  return out;
}

}  // namespace

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kEmptyHierarchy: return "EmptyHierarchy";
    case ErrorCode::kInvalidId: return "InvalidId";
    case ErrorCode::kDuplicateId: return "DuplicateId";
    case ErrorCode::kUnknownParent: return "UnknownParent";
    case ErrorCode::kCycleDetected: return "CycleDetected";
    case ErrorCode::kNegativeCitations: return "NegativeCitations";
    case ErrorCode::kMissingRank: return "MissingRank";
    case ErrorCode::kNonMonotoneRanks: return "NonMonotoneRanks";
    case ErrorCode::kUnknownNode: return "UnknownNode";
    case ErrorCode::kNotAnAntichain: return "NotAnAntichain";
    case ErrorCode::kSuppliedRanksNotLiftable: return "SuppliedRanksNotLiftable";
    case ErrorCode::kSurrogateIdCollision: return "SurrogateIdCollision";
    case ErrorCode::kStratumNotAntichain: return "StratumNotAntichain";
    case ErrorCode::kMissingLabels: return "MissingLabels";
    case ErrorCode::kTooLargeForEnumeration: return "TooLargeForEnumeration";
    case ErrorCode::kInvalidDistributionParams: return "InvalidDistributionParams";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kInternal: return "Internal";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message,
             std::optional<std::size_t> line)
    : std::runtime_error(format_message(code, message, line)),
      code_(code),
      line_(line) {}

}  // namespace hindex
