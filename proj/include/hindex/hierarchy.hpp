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

#ifndef HINDEX_HIERARCHY_HPP_
#define HINDEX_HIERARCHY_HPP_

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hindex {

using Citations = std::uint64_t;
using Rank = std::uint64_t;
using NodeIndex = std::uint32_t;

// Opaque node identifier. Non-empty, free of tabs and line breaks so that it
// survives the tab-separated table format unchanged.
class NodeId {
 public:
  NodeId() = default;
  explicit NodeId(std::string value) : value_(std::move(value)) {}

  const std::string& str() const { return value_; }
  bool empty() const { return value_.empty(); }

  friend auto operator<=>(const NodeId&, const NodeId&) = default;
  friend bool operator==(const NodeId&, const NodeId&) = default;

 private:
  std::string value_;
};

// True when `id` is usable as a NodeId.
bool is_valid_id(std::string_view id);

// One row of input, before validation. Citations are signed here so that
// negative counts coming from text inputs can be rejected explicitly.
struct NodeEntry {
  std::string id;
  std::optional<std::string> parent;
  std::int64_t citations = 0;
  std::optional<std::string> label;
};

struct Node {
  NodeId id;
  std::optional<std::string> label;
  Citations direct_citations = 0;
  std::optional<NodeIndex> parent;
};

enum class RankMode { kAggregated, kSupplied };

using SuppliedRanks = std::map<std::string, Rank, std::less<>>;

// Set of mutually incomparable nodes, kept in ascending id order.
class Antichain {
 public:
  Antichain() = default;
  explicit Antichain(std::vector<NodeId> members);

  const std::vector<NodeId>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  bool contains(const NodeId& id) const;

  friend bool operator==(const Antichain&, const Antichain&) = default;

 private:
  std::vector<NodeId> members_;
};

// Immutable forest with a monotone rank per node.
//
// Nodes are stored in ascending id order, so NodeIndex order and id order
// coincide; children lists and roots are therefore also id-sorted.
class RankedHierarchy {
 public:
  RankedHierarchy() = default;

  std::size_t size() const { return nodes_.size(); }
  bool empty() const { return nodes_.empty(); }
  RankMode rank_mode() const { return rank_mode_; }

  const Node& node(NodeIndex i) const { return nodes_[i]; }
  const NodeId& id(NodeIndex i) const { return nodes_[i].id; }
  Rank rank(NodeIndex i) const { return ranks_[i]; }
  std::span<const Rank> ranks() const { return ranks_; }
  std::optional<NodeIndex> parent(NodeIndex i) const { return nodes_[i].parent; }
  std::span<const NodeIndex> children(NodeIndex i) const {
    return {child_list_.data() + child_offsets_[i],
            child_list_.data() + child_offsets_[i + 1]};
  }
  bool is_leaf(NodeIndex i) const {
    return child_offsets_[i] == child_offsets_[i + 1];
  }
  std::span<const NodeIndex> roots() const { return roots_; }

  // Nodes in depth-first preorder (roots and children in id order).
  std::span<const NodeIndex> preorder() const { return preorder_; }
  std::size_t preorder_position(NodeIndex i) const { return enter_[i]; }

  std::optional<NodeIndex> find(std::string_view id) const;
  // Throws Error(kUnknownNode).
  NodeIndex index_of(std::string_view id) const;

  // True iff `ancestor` lies strictly above `descendant`.
  bool is_ancestor(NodeIndex ancestor, NodeIndex descendant) const {
    return ancestor != descendant && enter_[ancestor] <= enter_[descendant] &&
           exit_[descendant] <= exit_[ancestor];
  }
  bool comparable(NodeIndex a, NodeIndex b) const {
    return a == b || is_ancestor(a, b) || is_ancestor(b, a);
  }

  std::size_t depth(NodeIndex i) const { return depth_[i]; }
  Citations total_citations() const { return total_citations_; }
  std::size_t leaf_count() const;
  std::size_t internal_count() const { return size() - leaf_count(); }
  bool has_labels() const;

  // Rows that rebuild this hierarchy, in id order.
  std::vector<NodeEntry> entries() const;
  Antichain to_antichain(std::span<const NodeIndex> members) const;

 private:
  friend RankedHierarchy build_hierarchy(std::vector<NodeEntry>, RankMode,
                                         const SuppliedRanks&);

  std::vector<Node> nodes_;
  std::vector<Rank> ranks_;
  std::vector<NodeIndex> child_offsets_;
  std::vector<NodeIndex> child_list_;
  std::vector<NodeIndex> roots_;
  std::vector<NodeIndex> preorder_;
  std::vector<NodeIndex> enter_;
  std::vector<NodeIndex> exit_;
  std::vector<std::uint32_t> depth_;
  Citations total_citations_ = 0;
  RankMode rank_mode_ = RankMode::kAggregated;
};

// Validates `entries` and builds the forest. In aggregated mode each rank is
// the node's own citations plus those of all its descendants; in supplied
// mode `supplied_ranks` must cover every id and be monotone.
//
// Errors: EmptyHierarchy, InvalidId, DuplicateId, UnknownParent,
// CycleDetected, NegativeCitations, MissingRank, NonMonotoneRanks.
RankedHierarchy build_hierarchy(std::vector<NodeEntry> entries,
                                RankMode rank_mode = RankMode::kAggregated,
                                const SuppliedRanks& supplied_ranks = {});

// Citation-aggregated rank of every node, keyed by id.
std::map<NodeId, Rank> aggregate_ranks(const RankedHierarchy& h);

bool is_antichain(const RankedHierarchy& h, std::span<const NodeId> ids);
bool is_antichain(const RankedHierarchy& h, const Antichain& a);

// Members of `ids` with no other member of `ids` below them.
Antichain minimal_elements(const RankedHierarchy& h,
                           std::span<const NodeId> ids);

// The maximal l-antichain: nodes of rank >= level all of whose children rank
// below level. Computed top-down from the roots.
std::vector<NodeIndex> l_antichain_indices(const RankedHierarchy& h,
                                           Rank level);
Antichain l_antichain(const RankedHierarchy& h, Rank level);

// `root` and everything below it, as a hierarchy of its own.
RankedHierarchy subtree(const RankedHierarchy& h, std::string_view root);

}  // namespace hindex

#endif  // HINDEX_HIERARCHY_HPP_
