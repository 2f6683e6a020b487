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

#ifndef HINDEX_H_INDEX_HPP_
#define HINDEX_H_INDEX_HPP_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "hindex/hierarchy.hpp"

namespace hindex {

// Classic h-index: the largest n such that at least n counts are >= n.
std::uint64_t flat_h_index(std::span<const std::uint64_t> counts);

// h-index of an antichain, using node ranks as citation counts.
// Throws Error(kNotAnAntichain) or Error(kUnknownNode).
std::uint64_t h_of_antichain(const RankedHierarchy& h, const Antichain& a);

// Median of a multiset of ranks, held as twice its value so that the
// midpoint of two middle ranks stays exact.
class MedianRank {
 public:
  MedianRank() = default;
  static MedianRank of(std::span<const Rank> ranks);
  static MedianRank from_twice(Rank twice) { return MedianRank(twice); }

  Rank twice() const { return twice_; }
  double value() const { return static_cast<double>(twice_) / 2.0; }
  // Decimal form: "77" or "77.5".
  std::string to_string() const;

  friend bool operator==(const MedianRank&, const MedianRank&) = default;

 private:
  explicit MedianRank(Rank twice) : twice_(twice) {}
  Rank twice_ = 0;
};

// One visited level of the top-down scan.
struct LevelTraceEntry {
  Rank level = 0;
  std::uint64_t size = 0;        // cardinality of the maximal l-antichain
  std::uint64_t h_at_level = 0;  // its h-index

  friend bool operator==(const LevelTraceEntry&, const LevelTraceEntry&) = default;
};

struct AntichainReport {
  std::uint64_t h = 0;
  Antichain antichain;
  MedianRank median_rank;
  Rank max_rank = 0;
  std::uint64_t nodes = 0;
  // Nodes whose rank was read, each counted once.
  std::uint64_t visited = 0;
  // Nodes pushed onto the down-chain.
  std::uint64_t digested = 0;
  Citations total_citations = 0;
  double sqrt_ratio = 0.0;
  std::vector<LevelTraceEntry> trace;

  friend bool operator==(const AntichainReport&, const AntichainReport&) = default;
};

struct MaxHOptions {
  // Skip children that cannot beat the antichain already found.
  bool prune = true;
  bool trace = false;
};

// h / sqrt(total), or 0 when total is 0.
double sqrt_ratio(std::uint64_t h, Citations total);

// Fills median, max, nodes, total_citations and sqrt_ratio for a report whose
// h and antichain are already set.
void fill_statistics(const RankedHierarchy& h, AntichainReport& report);

// Antichain with the largest h-index, found by the top-down level scan over
// a down-chain (max-heap by rank) and an up-chain (max-heap by the largest
// inserted child rank). Runs in O(n log n).
AntichainReport max_h_antichain(const RankedHierarchy& h, MaxHOptions options = {});

std::vector<LevelTraceEntry> level_trace(const RankedHierarchy& h);

}  // namespace hindex

#endif  // HINDEX_H_INDEX_HPP_
