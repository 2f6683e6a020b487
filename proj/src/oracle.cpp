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

#include "hindex/oracle.hpp"

#include <algorithm>
#include <set>

#include "hindex/error.hpp"

namespace hindex::oracle {
namespace {

// Largest s with at least s values >= s, by bucket counting.
std::uint64_t count_h(const std::vector<Rank>& ranks) {
  const std::size_t k = ranks.size();
  std::vector<std::uint64_t> buckets(k + 1, 0);
  for (Rank r : ranks) ++buckets[std::min<Rank>(r, k)];
  std::uint64_t at_least = 0;
  for (std::size_t s = k; s > 0; --s) {
    at_least += buckets[s];
    if (at_least >= s) return s;
  }
  return 0;
}

// Walks parent links; deliberately avoids the hierarchy's interval index.
bool above(const RankedHierarchy& h, NodeIndex ancestor, NodeIndex node) {
  for (auto p = h.parent(node); p; p = h.parent(*p)) {
    if (*p == ancestor) return true;
  }
  return false;
}

}  // namespace

void for_each_antichain(const RankedHierarchy& h,
                        const std::function<void(std::span<const NodeIndex>)>& visit) {
  const std::size_t n = h.size();
  if (n > kMaxEnumerationNodes) {
    throw Error(ErrorCode::kTooLargeForEnumeration,
                std::to_string(n) + " nodes exceeds the enumeration limit of " +
                    std::to_string(kMaxEnumerationNodes));
  }
  std::vector<std::uint32_t> comparable(n, 0);
  for (NodeIndex a = 0; a < n; ++a) {
    for (NodeIndex b = 0; b < n; ++b) {
      if (a == b || above(h, a, b) || above(h, b, a)) comparable[a] |= 1u << b;
    }
  }
  std::vector<NodeIndex> chosen;
  // Include/exclude over nodes in id order; `blocked` holds everything
  // comparable to a chosen node.
  std::function<void(NodeIndex, std::uint32_t)> branch = [&](NodeIndex next,
                                                             std::uint32_t blocked) {
    if (next == n) {
      visit(chosen);
      return;
    }
    if (!(blocked & (1u << next))) {
      chosen.push_back(next);
      branch(next + 1, blocked | comparable[next]);
      chosen.pop_back();
    }
    branch(next + 1, blocked);
  };
  branch(0, 0);
}

std::vector<Antichain> enumerate_antichains(const RankedHierarchy& h) {
  std::vector<Antichain> out;
  for_each_antichain(h, [&](std::span<const NodeIndex> members) {
    out.push_back(h.to_antichain(members));
  });
  return out;
}

OracleResult brute_force_max_h(const RankedHierarchy& h) {
  OracleResult result;
  std::vector<NodeIndex> best_members;
  bool have_best = false;
  for_each_antichain(h, [&](std::span<const NodeIndex> members) {
    ++result.antichains_examined;
    std::vector<Rank> ranks;
    for (NodeIndex v : members) ranks.push_back(h.rank(v));
    const std::uint64_t value = count_h(ranks);
    std::vector<NodeIndex> as_list(members.begin(), members.end());
    // Index order is id order, so this compares id lists lexicographically.
    if (!have_best || value > result.h ||
        (value == result.h && as_list < best_members)) {
      have_best = true;
      result.h = value;
      best_members = std::move(as_list);
    }
  });
  result.witness = h.to_antichain(best_members);
  return result;
}

OracleResult level_scan_max_h(const RankedHierarchy& h) {
  OracleResult result;
  std::set<Rank, std::greater<>> levels;
  for (NodeIndex v = 0; v < h.size(); ++v) {
    if (h.rank(v) > 0) levels.insert(h.rank(v));
  }
  std::vector<bool> has_member_below(h.size());
  for (Rank level : levels) {
    ++result.antichains_examined;
    // Minimal elements of {v : rank(v) >= level}: mark every ancestor of a
    // member, stopping once an already-marked ancestor is reached.
    std::fill(has_member_below.begin(), has_member_below.end(), false);
    for (NodeIndex v = 0; v < h.size(); ++v) {
      if (h.rank(v) < level) continue;
      for (auto p = h.parent(v); p && !has_member_below[*p]; p = h.parent(*p)) {
        has_member_below[*p] = true;
      }
    }
    std::vector<NodeIndex> members;
    std::vector<Rank> ranks;
    for (NodeIndex v = 0; v < h.size(); ++v) {
      if (h.rank(v) >= level && !has_member_below[v]) {
        members.push_back(v);
        ranks.push_back(h.rank(v));
      }
    }
    const std::uint64_t value = count_h(ranks);
    if (value > result.h) {
      result.h = value;
      result.witness = h.to_antichain(members);
    }
  }
  return result;
}

}  // namespace hindex::oracle
