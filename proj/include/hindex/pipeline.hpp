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

#ifndef HINDEX_PIPELINE_HPP_
#define HINDEX_PIPELINE_HPP_

#include <optional>
#include <set>
#include <string>

#include "hindex/h_index.hpp"
#include "hindex/report.hpp"

namespace hindex {

enum class FlatSource {
  kNone,
  kDirect,  // direct citations of every node
  kLeaves,  // ranks of the leaves
};

// Structural steps run in a fixed order: subtree, depth truncation, label
// truncation, lifting. Flat analysis ignores the order structure entirely.
struct AnalysisOptions {
  std::optional<std::string> subtree;
  std::optional<std::size_t> truncate_depth;
  std::set<std::string, std::less<>> truncate_labels;
  bool lift = false;
  FlatSource flat = FlatSource::kNone;
  MaxHOptions compute;
};

struct Analysis {
  AntichainReport report;
  ReportMode mode = ReportMode::kFull;
};

// Applies the structural steps. Throws Error(kInvalidArgument) when lifting
// and flat analysis are both requested.
RankedHierarchy prepare(const RankedHierarchy& h, const AnalysisOptions& options);

Analysis analyze(const RankedHierarchy& h, const AnalysisOptions& options);

// Classic h-index over the chosen counts. The reported members are the items
// whose count is at least the h-th largest count.
AntichainReport flat_report(const RankedHierarchy& h, FlatSource source);

}  // namespace hindex

#endif  // HINDEX_PIPELINE_HPP_
