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

#ifndef HINDEX_TESTS_SUPPORT_FIXTURES_HPP_
#define HINDEX_TESTS_SUPPORT_FIXTURES_HPP_

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "hindex/hierarchy.hpp"

namespace hindex::testing {

inline NodeEntry entry(std::string id, std::optional<std::string> parent,
                       std::int64_t citations,
                       std::optional<std::string> label = std::nullopt) {
  return NodeEntry{std::move(id), std::move(parent), citations, std::move(label)};
}

// R(0){X(0){a:3,b:5,c:1}, Y(2){d:4,e:4}}; X and Y labelled "class".
inline std::vector<NodeEntry> e3_entries() {
  return {entry("R", std::nullopt, 0, "root"), entry("X", "R", 0, "class"),
          entry("Y", "R", 2, "class"),         entry("a", "X", 3, "item"),
          entry("b", "X", 5, "item"),          entry("c", "X", 1, "item"),
          entry("d", "Y", 4, "item"),          entry("e", "Y", 4, "item")};
}
inline RankedHierarchy e3() { return build_hierarchy(e3_entries()); }

// R(0){P1(0), P2(0), P3(0)}, each P with three leaves of 2 citations.
inline std::vector<NodeEntry> e1_entries() {
  std::vector<NodeEntry> out{entry("R", std::nullopt, 0)};
  for (int p = 1; p <= 3; ++p) {
    const std::string parent = "P" + std::to_string(p);
    out.push_back(entry(parent, "R", 0));
    for (int l = 1; l <= 3; ++l) {
      out.push_back(entry(parent + "L" + std::to_string(l), parent, 2));
    }
  }
  return out;
}
inline RankedHierarchy e1() { return build_hierarchy(e1_entries()); }

// N1(4) -> N2(5) -> {N3(4), N4(5)}.
inline std::vector<NodeEntry> chain_entries() {
  return {entry("N1", std::nullopt, 4), entry("N2", "N1", 5), entry("N3", "N2", 4),
          entry("N4", "N2", 5)};
}
inline RankedHierarchy chain() { return build_hierarchy(chain_entries()); }

// Random small forests for property tests. Ids are a random permutation of
// v00..vNN so that id order and parent order disagree; parents come from
// earlier-created nodes.
struct RandomShape {
  std::size_t min_nodes = 1;
  std::size_t max_nodes = 14;
  std::int64_t max_citations = 6;
  double root_probability = 0.1;
  double internal_cited_probability = 0.5;
  double zero_probability = 0.2;
};

inline std::vector<NodeEntry> random_entries(std::mt19937_64& rng, const RandomShape& shape) {
  std::uniform_int_distribution<std::size_t> size_dist(shape.min_nodes, shape.max_nodes);
  const std::size_t n = size_dist(rng);
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  std::shuffle(perm.begin(), perm.end(), rng);
  auto name = [&](std::size_t i) {
    std::string digits = std::to_string(perm[i]);
    return "v" + std::string(digits.size() < 2 ? 1 : 0, '0') + digits;
  };
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::uniform_int_distribution<std::int64_t> cites(1, shape.max_citations);
  std::vector<std::optional<std::size_t>> parent(n);
  std::vector<bool> has_child(n, false);
  for (std::size_t i = 1; i < n; ++i) {
    if (coin(rng) < shape.root_probability) continue;
    parent[i] = std::uniform_int_distribution<std::size_t>(0, i - 1)(rng);
    has_child[*parent[i]] = true;
  }
  const bool cite_internal = coin(rng) < shape.internal_cited_probability;
  std::vector<NodeEntry> out;
  for (std::size_t i = 0; i < n; ++i) {
    std::int64_t c = coin(rng) < shape.zero_probability ? 0 : cites(rng);
    if (has_child[i] && !cite_internal) c = 0;
    out.push_back(entry(name(i), parent[i] ? std::optional(name(*parent[i])) : std::nullopt, c));
  }
  return out;
}

inline RankedHierarchy random_hierarchy(std::mt19937_64& rng, const RandomShape& shape = {}) {
  return build_hierarchy(random_entries(rng, shape));
}

// Independent recursive sum of direct citations below (and at) `id`.
inline std::int64_t recursive_sum(const std::vector<NodeEntry>& entries, const std::string& id) {
  std::int64_t total = 0;
  for (const auto& e : entries) {
    if (e.id == id) total += e.citations;
    if (e.parent && *e.parent == id) total += recursive_sum(entries, e.id);
  }
  return total;
}

}  // namespace hindex::testing

#endif  // HINDEX_TESTS_SUPPORT_FIXTURES_HPP_
