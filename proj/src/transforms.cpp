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

#include "hindex/transforms.hpp"

#include "hindex/error.hpp"

namespace hindex {

std::string surrogate_id(std::string_view original) {
  std::string out(kSurrogatePrefix);
  out += original;
  return out;
}

LiftedHierarchy lift(const RankedHierarchy& h) {
  if (h.rank_mode() != RankMode::kAggregated) {
    throw Error(ErrorCode::kSuppliedRanksNotLiftable,
                "lifting needs ranks aggregated from citations");
  }
  LiftedHierarchy out;
  std::vector<NodeEntry> entries;
  entries.reserve(h.size() + h.internal_count());

  // Where a node hangs in the lifted forest: under the surrogate of its
  // original parent.
  auto lifted_parent = [&](NodeIndex v) -> std::optional<std::string> {
    if (auto p = h.parent(v)) return surrogate_id(h.id(*p).str());
    return std::nullopt;
  };

  for (NodeIndex v = 0; v < h.size(); ++v) {
    const Node& node = h.node(v);
    NodeEntry e;
    e.id = node.id.str();
    e.citations = static_cast<std::int64_t>(node.direct_citations);
    e.label = node.label;
    if (h.is_leaf(v)) {
      e.parent = lifted_parent(v);
    } else {
      std::string vid = surrogate_id(node.id.str());
      if (h.find(vid)) {
        throw Error(ErrorCode::kSurrogateIdCollision,
                    "surrogate id '" + vid + "' is already a node id");
      }
      NodeEntry surrogate;
      surrogate.id = vid;
      surrogate.parent = lifted_parent(v);
      surrogate.citations = 0;
      e.parent = vid;
      out.surrogate_of.emplace(NodeId(vid), node.id);
      entries.push_back(std::move(surrogate));
    }
    entries.push_back(std::move(e));
  }
  out.hierarchy = build_hierarchy(std::move(entries), RankMode::kAggregated);
  return out;
}

namespace {

// Keeps nodes for which `keep` holds (a parent-closed set); kept nodes whose
// children are not all kept absorb their subtree's citations.
template <typename Keep>
RankedHierarchy restrict_to(const RankedHierarchy& h, Keep keep) {
  std::vector<NodeEntry> entries;
  SuppliedRanks ranks;
  for (NodeIndex v = 0; v < h.size(); ++v) {
    if (!keep(v)) continue;
    const Node& node = h.node(v);
    NodeEntry e;
    e.id = node.id.str();
    if (node.parent) e.parent = h.id(*node.parent).str();
    e.label = node.label;
    Citations direct = node.direct_citations;
    for (NodeIndex c : h.children(v)) {
      if (keep(c)) continue;
      // Subtree total, independent of the rank mode.
      auto order = h.preorder();
      for (std::size_t pos = h.preorder_position(c); pos < order.size(); ++pos) {
        NodeIndex d = order[pos];
        if (d != c && !h.is_ancestor(c, d)) break;
        direct += h.node(d).direct_citations;
      }
    }
    e.citations = static_cast<std::int64_t>(direct);
    if (h.rank_mode() == RankMode::kSupplied) ranks.emplace(e.id, h.rank(v));
    entries.push_back(std::move(e));
  }
  return build_hierarchy(std::move(entries), h.rank_mode(), ranks);
}

}  // namespace

RankedHierarchy truncate_at_depth(const RankedHierarchy& h, std::size_t depth) {
  return restrict_to(h, [&](NodeIndex v) { return h.depth(v) <= depth; });
}

RankedHierarchy truncate_at_labels(const RankedHierarchy& h,
                                   const std::set<std::string, std::less<>>& stratum) {
  if (stratum.empty()) return h;
  if (!h.has_labels()) {
    throw Error(ErrorCode::kMissingLabels,
                "label truncation needs a hierarchy with node labels");
  }
  auto in_stratum = [&](NodeIndex v) {
    const auto& label = h.node(v).label;
    return label && stratum.contains(*label);
  };
  // below_cut[v]: some proper ancestor of v is a stratum node.
  std::vector<bool> below_cut(h.size(), false);
  for (NodeIndex v : h.preorder()) {
    auto p = h.parent(v);
    if (!p) continue;
    below_cut[v] = below_cut[*p] || in_stratum(*p);
    if (below_cut[v] && in_stratum(v)) {
      throw Error(ErrorCode::kStratumNotAntichain,
                  "stratum node '" + h.id(v).str() + "' lies below another stratum node");
    }
  }
  return restrict_to(h, [&](NodeIndex v) { return !below_cut[v]; });
}

std::vector<std::uint64_t> leaves_only(const RankedHierarchy& h) {
  std::vector<std::uint64_t> out;
  for (NodeIndex v = 0; v < h.size(); ++v) {
    if (h.is_leaf(v)) out.push_back(h.rank(v));
  }
  return out;
}

std::vector<std::uint64_t> direct_counts(const RankedHierarchy& h) {
  std::vector<std::uint64_t> out;
  out.reserve(h.size());
  for (NodeIndex v = 0; v < h.size(); ++v) out.push_back(h.node(v).direct_citations);
  return out;
}

}  // namespace hindex
