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

#ifndef HINDEX_ERROR_HPP_
#define HINDEX_ERROR_HPP_

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace hindex {

enum class ErrorCode {
  kEmptyHierarchy,
  kInvalidId,
  kDuplicateId,
  kUnknownParent,
  kCycleDetected,
  kNegativeCitations,
  kMissingRank,
  kNonMonotoneRanks,
  kUnknownNode,
  kNotAnAntichain,
  kSuppliedRanksNotLiftable,
  kSurrogateIdCollision,
  kStratumNotAntichain,
  kMissingLabels,
  kTooLargeForEnumeration,
  kInvalidDistributionParams,
  kParseError,
  kInvalidArgument,
  kInternal,
};

std::string_view to_string(ErrorCode code);

// Every failure surfaced by the library. Input-derived errors carry the
// 1-based source line when the input came from a text format.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message,
        std::optional<std::size_t> line = std::nullopt);

  ErrorCode code() const { return code_; }
  std::optional<std::size_t> line() const { return line_; }

 private:
  ErrorCode code_;
  std::optional<std::size_t> line_;
};

}  // namespace hindex

#endif  // HINDEX_ERROR_HPP_
