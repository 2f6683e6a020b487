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

#include "hindex/h_index.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <optional>

#include "hindex/error.hpp"

namespace hindex {

std::uint64_t flat_h_index(std::span<const std::uint64_t> counts) {
  std::vector<std::uint64_t> sorted(counts.begin(), counts.end());
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  std::uint64_t h = 0;
  while (h < sorted.size() && sorted[h] >= h + 1) ++h;
  return h;
}

std::uint64_t h_of_antichain(const RankedHierarchy& h, const Antichain& a) {
  if (!is_antichain(h, a)) {
    throw Error(ErrorCode::kNotAnAntichain, "members are not pairwise incomparable");
  }
  std::vector<std::uint64_t> ranks;
  ranks.reserve(a.size());
  for (const NodeId& id : a.members()) ranks.push_back(h.rank(h.index_of(id.str())));
  return flat_h_index(ranks);
}

MedianRank MedianRank::of(std::span<const Rank> ranks) {
  if (ranks.empty()) return MedianRank(0);
  std::vector<Rank> sorted(ranks.begin(), ranks.end());
  std::sort(sorted.begin(), sorted.end());
  const std::size_t mid = sorted.size() / 2;
  if (sorted.size() % 2 == 1) return MedianRank(sorted[mid] * 2);
  return MedianRank(sorted[mid - 1] + sorted[mid]);
}

std::string MedianRank::to_string() const {
  std::string out = std::to_string(twice_ / 2);
  if (twice_ % 2 == 1) out += ".5";
  return out;
}

double sqrt_ratio(std::uint64_t h, Citations total) {
  if (total == 0) return 0.0;
  return static_cast<double>(h) / std::sqrt(static_cast<double>(total));
}

void fill_statistics(const RankedHierarchy& h, AntichainReport& report) {
  std::vector<Rank> ranks;
  ranks.reserve(report.antichain.size());
  for (const NodeId& id : report.antichain.members()) {
    ranks.push_back(h.rank(h.index_of(id.str())));
  }
  report.median_rank = MedianRank::of(ranks);
  report.max_rank = ranks.empty() ? 0 : *std::max_element(ranks.begin(), ranks.end());
  report.nodes = h.size();
  report.total_citations = h.total_citations();
  report.sqrt_ratio = sqrt_ratio(report.h, report.total_citations);
}

namespace {

struct HeapItem {
  Rank key;
  NodeIndex node;
};

// Max-heap order on key; equal keys surface the smaller index (= smaller id).
struct HeapLess {
  bool operator()(const HeapItem& a, const HeapItem& b) const {
    if (a.key != b.key) return a.key < b.key;
    return a.node > b.node;
  }
};

class Heap {
 public:
  bool empty() const { return items_.empty(); }
  std::size_t size() const { return items_.size(); }
  const HeapItem& top() const { return items_.front(); }
  void push(HeapItem item) {
    items_.push_back(item);
    std::push_heap(items_.begin(), items_.end(), HeapLess{});
  }
  void pop() {
    std::pop_heap(items_.begin(), items_.end(), HeapLess{});
    items_.pop_back();
  }
  const std::vector<HeapItem>& items() const { return items_; }

 private:
  std::vector<HeapItem> items_;
};

}  // namespace

AntichainReport max_h_antichain(const RankedHierarchy& h, MaxHOptions options) {
  AntichainReport report;
  Heap down;  // DCHAIN, keyed by rank
  Heap up;    // LCHAIN, keyed by the largest rank among inserted children

  // Children ranked at or below `threshold` cannot be part of an antichain
  // that beats the best one already seen. Rank 0 is always below threshold.
  auto consider = [&](NodeIndex v, Rank threshold) -> std::optional<Rank> {
    ++report.visited;
    const Rank r = h.rank(v);
    if (r == 0 || (options.prune && r <= threshold)) return std::nullopt;
    down.push({r, v});
    ++report.digested;
    return r;
  };

  for (NodeIndex root : h.roots()) consider(root, 0);

  std::uint64_t best_h = 0;
  std::optional<Rank> best_level;
  while (!down.empty()) {
    const Rank level = down.top().key;
    if (up.size() > level) break;
    // The up-chain at this point is the previous level's antichain, whose
    // h-index equals its size.
    const Rank threshold = up.size();

    while (!down.empty() && down.top().key == level) {
      const NodeIndex v = down.top().node;
      down.pop();
      Rank max_child = 0;
      for (NodeIndex c : h.children(v)) {
        if (auto r = consider(c, threshold)) max_child = std::max(max_child, *r);
      }
      up.push({max_child, v});
    }
    while (!up.empty() && up.top().key >= level) up.pop();

    const std::uint64_t size = up.size();
    std::uint64_t h_here = size;
    if (size > level) {
      std::vector<std::uint64_t> ranks;
      ranks.reserve(size);
      for (const HeapItem& item : up.items()) ranks.push_back(h.rank(item.node));
      h_here = flat_h_index(ranks);
    }
    if (options.trace) report.trace.push_back({level, size, h_here});
    if (h_here > best_h) {
      best_h = h_here;
      best_level = level;
    }
  }

  report.h = best_h;
  if (best_level) {
    auto members = l_antichain_indices(h, *best_level);
    std::vector<std::uint64_t> ranks;
    ranks.reserve(members.size());
    for (NodeIndex v : members) ranks.push_back(h.rank(v));
    if (flat_h_index(ranks) != best_h) {
      throw Error(ErrorCode::kInternal,
                  "antichain at level " + std::to_string(*best_level) +
                      " does not reproduce h=" + std::to_string(best_h));
    }
    report.antichain = h.to_antichain(members);
  }
  fill_statistics(h, report);
  return report;
}

std::vector<LevelTraceEntry> level_trace(const RankedHierarchy& h) {
  return max_h_antichain(h, {.prune = true, .trace = true}).trace;
}

}  // namespace hindex
