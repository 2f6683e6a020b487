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

#ifndef HINDEX_TRANSFORMS_HPP_
#define HINDEX_TRANSFORMS_HPP_

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "hindex/hierarchy.hpp"

namespace hindex {

// Hierarchy in which every original internal node N has been given a
// surrogate parent "V::N" that also adopts N's former children. Every
// original node ends up a leaf carrying only its direct citations.
struct LiftedHierarchy {
  RankedHierarchy hierarchy;
  std::map<NodeId, NodeId> surrogate_of;  // surrogate -> original

  bool is_surrogate(const NodeId& id) const { return surrogate_of.contains(id); }
};

inline constexpr std::string_view kSurrogatePrefix = "V::";

std::string surrogate_id(std::string_view original);

// Node count after lifting a hierarchy with `nodes` nodes of which `leaves`
// are leaves.
constexpr std::uint64_t lifted_node_count(std::uint64_t nodes, std::uint64_t leaves) {
  return nodes + (nodes - leaves);
}

// Errors: SuppliedRanksNotLiftable, SurrogateIdCollision.
LiftedHierarchy lift(const RankedHierarchy& h);

// Drops every node deeper than `depth` (roots are at depth 0). Nodes at the
// cut keep their rank: the citations of removed descendants are folded into
// their direct count.
RankedHierarchy truncate_at_depth(const RankedHierarchy& h, std::size_t depth);

// Turns every node whose label is in `stratum` into a leaf, folding its
// descendants in as above. Errors: StratumNotAntichain, MissingLabels.
RankedHierarchy truncate_at_labels(const RankedHierarchy& h,
                                   const std::set<std::string, std::less<>>& stratum);

// Ranks of the leaves, in id order.
std::vector<std::uint64_t> leaves_only(const RankedHierarchy& h);

// Direct citation counts of every node, in id order.
std::vector<std::uint64_t> direct_counts(const RankedHierarchy& h);

}  // namespace hindex

#endif  // HINDEX_TRANSFORMS_HPP_
