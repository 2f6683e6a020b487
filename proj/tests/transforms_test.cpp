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

#include <gtest/gtest.h>

#include "hindex/error.hpp"
#include "hindex/h_index.hpp"
#include "support/fixtures.hpp"

namespace hindex {
namespace {

using testing::entry;

ErrorCode error_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected an error";
  return ErrorCode::kInternal;
}

TEST(Lift, SingleLeafUnchanged) {
  auto h = build_hierarchy({entry("only", std::nullopt, 3)});
  auto lifted = lift(h);
  EXPECT_EQ(lifted.hierarchy.size(), 1u);
  EXPECT_TRUE(lifted.surrogate_of.empty());
  EXPECT_EQ(lifted.hierarchy.rank(0), 3u);
}

TEST(Lift, ChainScenario) {
  auto lifted = lift(testing::chain());
  const auto& h = lifted.hierarchy;
  EXPECT_EQ(h.size(), 6u);
  EXPECT_EQ(h.rank(h.index_of("V::N1")), 18u);
  EXPECT_EQ(h.rank(h.index_of("V::N2")), 14u);
  for (const char* n : {"N1", "N2", "N3", "N4"}) {
    EXPECT_TRUE(h.is_leaf(h.index_of(n))) << n;
  }
  EXPECT_EQ(h.rank(h.index_of("N1")), 4u);
  EXPECT_EQ(h.rank(h.index_of("N2")), 5u);
  EXPECT_EQ(*h.parent(h.index_of("N1")), h.index_of("V::N1"));
  EXPECT_EQ(*h.parent(h.index_of("V::N2")), h.index_of("V::N1"));
  EXPECT_EQ(*h.parent(h.index_of("N3")), h.index_of("V::N2"));
  EXPECT_TRUE(lifted.is_surrogate(NodeId("V::N2")));
  EXPECT_FALSE(lifted.is_surrogate(NodeId("N2")));
  EXPECT_EQ(lifted.surrogate_of.at(NodeId("V::N1")), NodeId("N1"));

  auto r = max_h_antichain(h);
  EXPECT_EQ(r.h, 4u);
  EXPECT_EQ(r.antichain.size(), 4u);
  for (const char* n : {"N1", "N2", "N3", "N4"}) EXPECT_TRUE(r.antichain.contains(NodeId(n)));
}

TEST(Lift, SurrogateRankEqualsOriginalAggregate) {
  auto h = testing::e3();
  auto lifted = lift(h);
  for (const auto& [surrogate, original] : lifted.surrogate_of) {
    const auto& lh = lifted.hierarchy;
    EXPECT_EQ(lh.rank(lh.index_of(surrogate.str())), h.rank(h.index_of(original.str())));
    EXPECT_EQ(lh.node(lh.index_of(surrogate.str())).direct_citations, 0u);
  }
  EXPECT_EQ(lifted.hierarchy.size(), h.size() + h.internal_count());
}

TEST(Lift, TableTwoNodeCount) {
  // 793 internal nodes in a chain, 3,286 leaves under the last one.
  std::vector<NodeEntry> entries;
  const int internal = 4079 - 3286;
  auto iname = [](int i) { return "i" + std::to_string(1000 + i); };
  for (int i = 0; i < internal; ++i) {
    entries.push_back(entry(iname(i), i == 0 ? std::nullopt : std::optional(iname(i - 1)), 1));
  }
  for (int i = 0; i < 3286; ++i) {
    entries.push_back(entry("l" + std::to_string(10000 + i), iname(internal - 1), 1));
  }
  auto h = build_hierarchy(std::move(entries));
  ASSERT_EQ(h.size(), 4079u);
  ASSERT_EQ(h.leaf_count(), 3286u);
  EXPECT_EQ(lift(h).hierarchy.size(), 4872u);
  static_assert(lifted_node_count(4079, 3286) == 4872);
}

TEST(Lift, Errors) {
  auto supplied = build_hierarchy({entry("r", std::nullopt, 0), entry("c", "r", 0)},
                                  RankMode::kSupplied, {{"r", 2}, {"c", 1}});
  EXPECT_EQ(error_of([&] { lift(supplied); }), ErrorCode::kSuppliedRanksNotLiftable);
  auto clash = build_hierarchy({entry("r", std::nullopt, 0), entry("c", "r", 1),
                                entry("V::r", std::nullopt, 1)});
  EXPECT_EQ(error_of([&] { lift(clash); }), ErrorCode::kSurrogateIdCollision);
}

TEST(TruncateAtDepth, Examples) {
  auto h = testing::e3();
  auto d0 = truncate_at_depth(h, 0);
  EXPECT_EQ(d0.size(), 1u);
  EXPECT_EQ(d0.rank(0), 19u);
  EXPECT_EQ(max_h_antichain(d0).h, 1u);

  auto d1 = truncate_at_depth(h, 1);
  EXPECT_EQ(d1.size(), 3u);
  EXPECT_EQ(d1.rank(d1.index_of("X")), 9u);
  EXPECT_EQ(d1.rank(d1.index_of("Y")), 10u);
  auto r = max_h_antichain(d1);
  EXPECT_EQ(r.h, 2u);
  EXPECT_EQ(r.antichain.size(), 2u);
  EXPECT_TRUE(r.antichain.contains(NodeId("X")));
  EXPECT_TRUE(r.antichain.contains(NodeId("Y")));

  auto deep = truncate_at_depth(h, 99);
  EXPECT_EQ(deep.entries().size(), h.size());
  for (NodeIndex v = 0; v < h.size(); ++v) EXPECT_EQ(deep.rank(v), h.rank(v));
}

TEST(TruncateAtLabels, Examples) {
  auto h = testing::e3();
  auto by_label = truncate_at_labels(h, {"class"});
  auto by_depth = truncate_at_depth(h, 1);
  ASSERT_EQ(by_label.size(), by_depth.size());
  for (NodeIndex v = 0; v < by_label.size(); ++v) {
    EXPECT_EQ(by_label.id(v), by_depth.id(v));
    EXPECT_EQ(by_label.rank(v), by_depth.rank(v));
  }
  auto same = truncate_at_labels(h, {});
  EXPECT_EQ(same.size(), h.size());

  auto nested = build_hierarchy({entry("R", std::nullopt, 0), entry("X", "R", 0, "cut"),
                                 entry("b", "X", 5, "cut")});
  EXPECT_EQ(error_of([&] { truncate_at_labels(nested, {"cut"}); }),
            ErrorCode::kStratumNotAntichain);

  auto unlabelled = testing::chain();
  EXPECT_EQ(error_of([&] { truncate_at_labels(unlabelled, {"class"}); }),
            ErrorCode::kMissingLabels);
}

TEST(TruncateAtLabels, UncutBranchesStayWhole) {
  auto h = build_hierarchy({entry("R", std::nullopt, 0), entry("A", "R", 1, "fam"),
                            entry("a1", "A", 2), entry("B", "R", 0), entry("b1", "B", 3)});
  auto t = truncate_at_labels(h, {"fam"});
  EXPECT_EQ(t.size(), 4u);
  EXPECT_FALSE(t.find("a1"));
  EXPECT_TRUE(t.find("b1"));
  EXPECT_EQ(t.node(t.index_of("A")).direct_citations, 3u);
}

TEST(LeavesOnly, Examples) {
  EXPECT_EQ(leaves_only(testing::e3()), (std::vector<std::uint64_t>{3, 5, 1, 4, 4}));
  EXPECT_EQ(flat_h_index(leaves_only(testing::e3())), 3u);
  EXPECT_EQ(leaves_only(build_hierarchy({entry("x", std::nullopt, 9)})),
            (std::vector<std::uint64_t>{9}));
  auto e1_leaves = leaves_only(testing::e1());
  EXPECT_EQ(e1_leaves, std::vector<std::uint64_t>(9, 2));
  EXPECT_EQ(flat_h_index(e1_leaves), 2u);
  EXPECT_EQ(max_h_antichain(testing::e1()).h, 3u);
}

TEST(HierarchyVsFlat, InternalCitationsCanLowerTheHIndex) {
  auto h = testing::chain();
  EXPECT_EQ(max_h_antichain(h).h, 2u);
  EXPECT_EQ(flat_h_index(direct_counts(h)), 4u);
  EXPECT_EQ(max_h_antichain(lift(h).hierarchy).h, 4u);
}

}  // namespace
}  // namespace hindex
