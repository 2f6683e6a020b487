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

#ifndef HINDEX_REPORT_HPP_
#define HINDEX_REPORT_HPP_

#include <string>
#include <string_view>

#include "hindex/h_index.hpp"

namespace hindex {

inline constexpr int kReportSchemaVersion = 1;

enum class ReportMode { kFull, kFlat, kLifted, kTruncated };

std::string_view to_string(ReportMode mode);

// "sha256:<hex>" of the input after CRLF -> LF normalization.
std::string input_digest(std::string_view bytes);

// Canonical JSON report. Keys appear in a fixed order:
// schema_version, input_digest, mode, h, antichain, median_rank, max_rank,
// nodes, visited, digested, total_citations, sqrt_ratio and, when the report
// carries one, trace. Identical inputs give identical bytes.
std::string write_report(const AntichainReport& report, ReportMode mode,
                         std::string_view digest);

}  // namespace hindex

#endif  // HINDEX_REPORT_HPP_
