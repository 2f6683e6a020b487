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

#ifndef HINDEX_ORACLE_HPP_
#define HINDEX_ORACLE_HPP_

#include <cstdint>
#include <functional>
#include <vector>

#include "hindex/hierarchy.hpp"

namespace hindex::oracle {

// Slow reference computations of the maximal h-index. They share no code
// with max_h_antichain beyond the hierarchy itself.

inline constexpr std::size_t kMaxEnumerationNodes = 20;

struct OracleResult {
  std::uint64_t h = 0;
  Antichain witness;
  std::uint64_t antichains_examined = 0;
};

// Calls `visit` once for every antichain, the empty one included. Members
// are passed in ascending id order. Throws Error(kTooLargeForEnumeration)
// above kMaxEnumerationNodes nodes.
void for_each_antichain(const RankedHierarchy& h,
                        const std::function<void(std::span<const NodeIndex>)>& visit);

std::vector<Antichain> enumerate_antichains(const RankedHierarchy& h);

// Maximum over every antichain. Ties go to the lexicographically smallest
// member list.
OracleResult brute_force_max_h(const RankedHierarchy& h);

// Maximum over the maximal l-antichains, one per distinct positive rank,
// each rebuilt from the definition.
OracleResult level_scan_max_h(const RankedHierarchy& h);

}  // namespace hindex::oracle

#endif  // HINDEX_ORACLE_HPP_
