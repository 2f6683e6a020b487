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

#include "hindex/hierarchy.hpp"

#include <algorithm>
#include <numeric>

#include "hindex/error.hpp"

namespace hindex {

bool is_valid_id(std::string_view id) {
  return !id.empty() && id.find_first_of("\t\r\n") == std::string_view::npos;
}

Antichain::Antichain(std::vector<NodeId> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

bool Antichain::contains(const NodeId& id) const {
  return std::binary_search(members_.begin(), members_.end(), id);
}

std::optional<NodeIndex> RankedHierarchy::find(std::string_view id) const {
  auto it = std::lower_bound(
      nodes_.begin(), nodes_.end(), id,
      [](const Node& n, std::string_view key) { return n.id.str() < key; });
  if (it == nodes_.end() || it->id.str() != id) return std::nullopt;
  return static_cast<NodeIndex>(it - nodes_.begin());
}

NodeIndex RankedHierarchy::index_of(std::string_view id) const {
  if (auto i = find(id)) return *i;
  throw Error(ErrorCode::kUnknownNode, "no node with id '" + std::string(id) + "'");
}

std::size_t RankedHierarchy::leaf_count() const {
  std::size_t leaves = 0;
  for (NodeIndex i = 0; i < size(); ++i) leaves += is_leaf(i) ? 1 : 0;
  return leaves;
}

bool RankedHierarchy::has_labels() const {
  return std::any_of(nodes_.begin(), nodes_.end(),
                     [](const Node& n) { return n.label.has_value(); });
}

std::vector<NodeEntry> RankedHierarchy::entries() const {
  std::vector<NodeEntry> out;
  out.reserve(nodes_.size());
  for (const Node& n : nodes_) {
    NodeEntry e;
    e.id = n.id.str();
    if (n.parent) e.parent = nodes_[*n.parent].id.str();
    e.citations = static_cast<std::int64_t>(n.direct_citations);
    e.label = n.label;
    out.push_back(std::move(e));
  }
  return out;
}

Antichain RankedHierarchy::to_antichain(std::span<const NodeIndex> members) const {
  std::vector<NodeId> ids;
  ids.reserve(members.size());
  for (NodeIndex i : members) ids.push_back(nodes_[i].id);
  return Antichain(std::move(ids));
}

RankedHierarchy build_hierarchy(std::vector<NodeEntry> entries, RankMode rank_mode,
                                const SuppliedRanks& supplied_ranks) {
  if (entries.empty()) {
    throw Error(ErrorCode::kEmptyHierarchy, "a hierarchy needs at least one node");
  }
  for (const NodeEntry& e : entries) {
    if (!is_valid_id(e.id)) {
      throw Error(ErrorCode::kInvalidId, "invalid node id '" + e.id + "'");
    }
    if (e.citations < 0) {
      throw Error(ErrorCode::kNegativeCitations,
                  "node '" + e.id + "' has " + std::to_string(e.citations) +
                      " citations");
    }
  }
  std::sort(entries.begin(), entries.end(),
            [](const NodeEntry& a, const NodeEntry& b) { return a.id < b.id; });
  for (std::size_t i = 1; i < entries.size(); ++i) {
    if (entries[i].id == entries[i - 1].id) {
      throw Error(ErrorCode::kDuplicateId, "node id '" + entries[i].id + "' appears twice");
    }
  }

  RankedHierarchy h;
  h.rank_mode_ = rank_mode;
  const std::size_t n = entries.size();
  h.nodes_.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    Node& node = h.nodes_[i];
    node.id = NodeId(std::move(entries[i].id));
    node.label = std::move(entries[i].label);
    node.direct_citations = static_cast<Citations>(entries[i].citations);
    h.total_citations_ += node.direct_citations;
  }
  for (std::size_t i = 0; i < n; ++i) {
    const auto& parent = entries[i].parent;
    if (!parent) continue;
    auto p = h.find(*parent);
    if (!p) {
      throw Error(ErrorCode::kUnknownParent, "node '" + h.nodes_[i].id.str() +
                                                 "' names missing parent '" + *parent + "'");
    }
    if (*p == i) {
      throw Error(ErrorCode::kCycleDetected,
                  "node '" + h.nodes_[i].id.str() + "' is its own parent");
    }
    h.nodes_[i].parent = *p;
  }

  // Children in CSR form; filling in index order keeps each list id-sorted.
  h.child_offsets_.assign(n + 1, 0);
  for (const Node& node : h.nodes_) {
    if (node.parent) ++h.child_offsets_[*node.parent + 1];
  }
  std::partial_sum(h.child_offsets_.begin(), h.child_offsets_.end(),
                   h.child_offsets_.begin());
  h.child_list_.resize(n - std::count_if(h.nodes_.begin(), h.nodes_.end(),
                                         [](const Node& x) { return !x.parent; }));
  {
    std::vector<NodeIndex> cursor(h.child_offsets_.begin(), h.child_offsets_.end() - 1);
    for (NodeIndex i = 0; i < n; ++i) {
      if (auto p = h.nodes_[i].parent) {
        h.child_list_[cursor[*p]++] = i;
      } else {
        h.roots_.push_back(i);
      }
    }
  }

  // Iterative preorder; nodes never reached from a root sit on a cycle.
  h.preorder_.reserve(n);
  h.enter_.assign(n, 0);
  h.exit_.assign(n, 0);
  h.depth_.assign(n, 0);
  std::vector<NodeIndex> stack;
  for (auto it = h.roots_.rbegin(); it != h.roots_.rend(); ++it) stack.push_back(*it);
  while (!stack.empty()) {
    NodeIndex v = stack.back();
    stack.pop_back();
    h.enter_[v] = static_cast<NodeIndex>(h.preorder_.size());
    h.preorder_.push_back(v);
    if (auto p = h.nodes_[v].parent) h.depth_[v] = h.depth_[*p] + 1;
    auto kids = h.children(v);
    for (auto it = kids.rbegin(); it != kids.rend(); ++it) stack.push_back(*it);
  }
  if (h.preorder_.size() != n) {
    std::vector<bool> reached(n, false);
    for (NodeIndex v : h.preorder_) reached[v] = true;
    auto culprit = std::find(reached.begin(), reached.end(), false) - reached.begin();
    throw Error(ErrorCode::kCycleDetected,
                "parent chain of node '" + h.nodes_[culprit].id.str() +
                    "' never reaches a root");
  }
  // exit_ = preorder position of the last node in the subtree.
  for (NodeIndex v : h.preorder_) h.exit_[v] = h.enter_[v];
  for (auto it = h.preorder_.rbegin(); it != h.preorder_.rend(); ++it) {
    if (auto p = h.nodes_[*it].parent) {
      h.exit_[*p] = std::max(h.exit_[*p], h.exit_[*it]);
    }
  }

  h.ranks_.resize(n);
  if (rank_mode == RankMode::kAggregated) {
    for (NodeIndex i = 0; i < n; ++i) h.ranks_[i] = h.nodes_[i].direct_citations;
    for (auto it = h.preorder_.rbegin(); it != h.preorder_.rend(); ++it) {
      if (auto p = h.nodes_[*it].parent) h.ranks_[*p] += h.ranks_[*it];
    }
  } else {
    for (const auto& [id, rank] : supplied_ranks) {
      if (!h.find(id)) {
        throw Error(ErrorCode::kUnknownNode, "rank supplied for unknown node '" + id + "'");
      }
    }
    for (NodeIndex i = 0; i < n; ++i) {
      auto it = supplied_ranks.find(h.nodes_[i].id.str());
      if (it == supplied_ranks.end()) {
        throw Error(ErrorCode::kMissingRank,
                    "no rank supplied for node '" + h.nodes_[i].id.str() + "'");
      }
      h.ranks_[i] = it->second;
    }
    for (NodeIndex i = 0; i < n; ++i) {
      auto p = h.nodes_[i].parent;
      if (p && h.ranks_[i] > h.ranks_[*p]) {
        throw Error(ErrorCode::kNonMonotoneRanks,
                    "node '" + h.nodes_[i].id.str() + "' (rank " +
                        std::to_string(h.ranks_[i]) + ") outranks its parent '" +
                        h.nodes_[*p].id.str() + "' (rank " +
                        std::to_string(h.ranks_[*p]) + ")");
      }
    }
  }
  return h;
}

std::map<NodeId, Rank> aggregate_ranks(const RankedHierarchy& h) {
  std::vector<Rank> sums(h.size());
  for (NodeIndex i = 0; i < h.size(); ++i) sums[i] = h.node(i).direct_citations;
  auto order = h.preorder();
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    if (auto p = h.parent(*it)) sums[*p] += sums[*it];
  }
  std::map<NodeId, Rank> out;
  for (NodeIndex i = 0; i < h.size(); ++i) out.emplace(h.id(i), sums[i]);
  return out;
}

namespace {

// Distinct indices of `ids`, sorted by preorder position.
std::vector<NodeIndex> resolve_by_preorder(const RankedHierarchy& h,
                                           std::span<const NodeId> ids) {
  std::vector<NodeIndex> idx;
  idx.reserve(ids.size());
  for (const NodeId& id : ids) idx.push_back(h.index_of(id.str()));
  std::sort(idx.begin(), idx.end());
  idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
  std::sort(idx.begin(), idx.end(), [&](NodeIndex a, NodeIndex b) {
    return h.preorder_position(a) < h.preorder_position(b);
  });
  return idx;
}

}  // namespace

bool is_antichain(const RankedHierarchy& h, std::span<const NodeId> ids) {
  auto idx = resolve_by_preorder(h, ids);
  // In preorder, any descendant of a member directly follows it in the list.
  for (std::size_t i = 1; i < idx.size(); ++i) {
    if (h.is_ancestor(idx[i - 1], idx[i])) return false;
  }
  return true;
}

bool is_antichain(const RankedHierarchy& h, const Antichain& a) {
  return is_antichain(h, std::span<const NodeId>(a.members()));
}

Antichain minimal_elements(const RankedHierarchy& h, std::span<const NodeId> ids) {
  auto idx = resolve_by_preorder(h, ids);
  std::vector<NodeIndex> keep;
  for (std::size_t i = 0; i < idx.size(); ++i) {
    bool has_member_below = i + 1 < idx.size() && h.is_ancestor(idx[i], idx[i + 1]);
    if (!has_member_below) keep.push_back(idx[i]);
  }
  std::sort(keep.begin(), keep.end());
  return h.to_antichain(keep);
}

std::vector<NodeIndex> l_antichain_indices(const RankedHierarchy& h, Rank level) {
  std::vector<NodeIndex> out;
  std::vector<NodeIndex> stack;
  for (NodeIndex r : h.roots()) {
    if (h.rank(r) >= level) stack.push_back(r);
  }
  while (!stack.empty()) {
    NodeIndex v = stack.back();
    stack.pop_back();
    bool descended = false;
    for (NodeIndex c : h.children(v)) {
      if (h.rank(c) >= level) {
        stack.push_back(c);
        descended = true;
      }
    }
    if (!descended) out.push_back(v);
  }
  std::sort(out.begin(), out.end());
  return out;
}

Antichain l_antichain(const RankedHierarchy& h, Rank level) {
  return h.to_antichain(l_antichain_indices(h, level));
}

RankedHierarchy subtree(const RankedHierarchy& h, std::string_view root) {
  const NodeIndex r = h.index_of(root);
  std::vector<NodeEntry> entries;
  SuppliedRanks ranks;
  auto order = h.preorder();
  const std::size_t begin = h.preorder_position(r);
  for (std::size_t pos = begin; pos < order.size(); ++pos) {
    NodeIndex v = order[pos];
    if (v != r && !h.is_ancestor(r, v)) break;
    NodeEntry e;
    e.id = h.id(v).str();
    if (v != r) e.parent = h.id(*h.parent(v)).str();
    e.citations = static_cast<std::int64_t>(h.node(v).direct_citations);
    e.label = h.node(v).label;
    if (h.rank_mode() == RankMode::kSupplied) ranks.emplace(e.id, h.rank(v));
    entries.push_back(std::move(e));
  }
  return build_hierarchy(std::move(entries), h.rank_mode(), ranks);
}

}  // namespace hindex
