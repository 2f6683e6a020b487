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

#include "hindex/pipeline.hpp"

#include <algorithm>
#include <functional>

#include "hindex/error.hpp"
#include "hindex/transforms.hpp"

namespace hindex {

RankedHierarchy prepare(const RankedHierarchy& h, const AnalysisOptions& options) {
  if (options.lift && options.flat != FlatSource::kNone) {
    throw Error(ErrorCode::kInvalidArgument, "lifting and flat analysis are exclusive");
  }
  RankedHierarchy out = options.subtree ? subtree(h, *options.subtree) : h;
  if (options.truncate_depth) out = truncate_at_depth(out, *options.truncate_depth);
  if (!options.truncate_labels.empty()) out = truncate_at_labels(out, options.truncate_labels);
  if (options.lift) out = lift(out).hierarchy;
  return out;
}

AntichainReport flat_report(const RankedHierarchy& h, FlatSource source) {
  std::vector<NodeIndex> items;
  std::vector<std::uint64_t> counts;
  for (NodeIndex v = 0; v < h.size(); ++v) {
    if (source == FlatSource::kLeaves && !h.is_leaf(v)) continue;
    items.push_back(v);
    counts.push_back(source == FlatSource::kLeaves ? h.rank(v) : h.node(v).direct_citations);
  }
  AntichainReport report;
  report.h = flat_h_index(counts);
  std::vector<Rank> kept;
  if (report.h > 0) {
    std::vector<std::uint64_t> sorted = counts;
    std::nth_element(sorted.begin(), sorted.begin() + (report.h - 1), sorted.end(),
                     std::greater<>());
    const std::uint64_t cutoff = sorted[report.h - 1];
    std::vector<NodeIndex> members;
    for (std::size_t i = 0; i < items.size(); ++i) {
      if (counts[i] >= cutoff) {
        members.push_back(items[i]);
        kept.push_back(counts[i]);
      }
    }
    report.antichain = h.to_antichain(members);
  }
  report.median_rank = MedianRank::of(kept);
  report.max_rank = kept.empty() ? 0 : *std::max_element(kept.begin(), kept.end());
  report.nodes = h.size();
  report.total_citations = h.total_citations();
  report.sqrt_ratio = sqrt_ratio(report.h, report.total_citations);
  return report;
}

Analysis analyze(const RankedHierarchy& h, const AnalysisOptions& options) {
  RankedHierarchy prepared = prepare(h, options);
  Analysis out;
  if (options.flat != FlatSource::kNone) {
    out.mode = ReportMode::kFlat;
    out.report = flat_report(prepared, options.flat);
    return out;
  }
  if (options.lift) {
    out.mode = ReportMode::kLifted;
  } else if (options.truncate_depth || !options.truncate_labels.empty()) {
    out.mode = ReportMode::kTruncated;
  }
  out.report = max_h_antichain(prepared, options.compute);
  return out;
}

}  // namespace hindex
