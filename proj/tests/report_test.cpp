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

#include "hindex/report.hpp"

#include <gtest/gtest.h>

#include <nlohmann/json.hpp>

#include "hindex/error.hpp"
#include "hindex/pipeline.hpp"
#include "support/fixtures.hpp"

namespace hindex {
namespace {

using nlohmann::json;
using testing::entry;

TEST(Report, E3FullDocument) {
  auto r = max_h_antichain(testing::e3(), {.prune = true, .trace = true});
  const std::string doc = write_report(r, ReportMode::kFull, "sha256:abc");
  const std::string expected = R"({
  "schema_version": 1,
  "input_digest": "sha256:abc",
  "mode": "full",
  "h": 3,
  "antichain": ["b", "d", "e"],
  "median_rank": 4,
  "max_rank": 5,
  "nodes": 8,
  "visited": 8,
  "digested": 7,
  "total_citations": 19,
  "sqrt_ratio": 0.6882472016116852,
  "trace": [
    {"level": 19, "size": 1, "h": 1},
    {"level": 10, "size": 1, "h": 1},
    {"level": 9, "size": 2, "h": 2},
    {"level": 5, "size": 2, "h": 2},
    {"level": 4, "size": 3, "h": 3},
    {"level": 3, "size": 4, "h": 3}
  ]
}
)";
  EXPECT_EQ(doc, expected);
  auto parsed = json::parse(doc);
  EXPECT_NEAR(parsed["sqrt_ratio"].get<double>(), 0.688, 5e-4);
}

TEST(Report, KeyOrderWithoutTrace) {
  auto r = max_h_antichain(testing::e1());
  auto parsed = nlohmann::ordered_json::parse(write_report(r, ReportMode::kLifted, "d"));
  std::vector<std::string> keys;
  for (auto it = parsed.begin(); it != parsed.end(); ++it) keys.push_back(it.key());
  EXPECT_EQ(keys, (std::vector<std::string>{"schema_version", "input_digest", "mode", "h",
                                            "antichain", "median_rank", "max_rank", "nodes",
                                            "visited", "digested", "total_citations",
                                            "sqrt_ratio"}));
  EXPECT_EQ(parsed["h"], 3);
  EXPECT_EQ(parsed["nodes"], 13);
  EXPECT_EQ(parsed["mode"], "lifted");
}

TEST(Report, ZeroHierarchy) {
  auto h = build_hierarchy({entry("r", std::nullopt, 0), entry("c", "r", 0)});
  auto parsed = json::parse(write_report(max_h_antichain(h), ReportMode::kFull, "d"));
  EXPECT_EQ(parsed["h"], 0);
  EXPECT_EQ(parsed["sqrt_ratio"], 0);
  EXPECT_TRUE(parsed["antichain"].empty());
}

TEST(Report, HalfMedianAndEscaping) {
  auto h = build_hierarchy({entry("a \"q\"", std::nullopt, 3), entry("b\\", std::nullopt, 4)});
  auto doc = write_report(max_h_antichain(h), ReportMode::kFull, "d");
  auto parsed = json::parse(doc);
  EXPECT_EQ(parsed["median_rank"].get<double>(), 3.5);
  EXPECT_EQ(parsed["antichain"][0], "a \"q\"");
  EXPECT_EQ(parsed["antichain"][1], "b\\");
}

TEST(InputDigest, StableAndLineEndingInsensitive) {
  EXPECT_EQ(input_digest("abc"),
            "sha256:ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
  EXPECT_EQ(input_digest("a\r\nb\n"), input_digest("a\nb\n"));
  EXPECT_NE(input_digest("a\nb\n"), input_digest("a\nc\n"));
}

TEST(FlatReport, DirectAndLeaves) {
  auto chain = testing::chain();
  auto direct = flat_report(chain, FlatSource::kDirect);
  EXPECT_EQ(direct.h, 4u);
  EXPECT_EQ(direct.antichain.size(), 4u);
  EXPECT_EQ(direct.median_rank.to_string(), "4.5");
  EXPECT_EQ(direct.max_rank, 5u);

  std::vector<NodeEntry> flat;
  int i = 0;
  for (int c : {5, 4, 4, 3, 1}) flat.push_back(entry("f" + std::to_string(i++), std::nullopt, c));
  auto h = build_hierarchy(flat);
  auto leaves = flat_report(h, FlatSource::kLeaves);
  EXPECT_EQ(leaves.h, 3u);
  EXPECT_EQ(leaves.antichain, max_h_antichain(h).antichain);
}

TEST(Pipeline, ModesAndExclusivity) {
  auto h = testing::e3();
  EXPECT_EQ(analyze(h, {}).mode, ReportMode::kFull);
  EXPECT_EQ(analyze(h, {.truncate_depth = 1}).mode, ReportMode::kTruncated);
  EXPECT_EQ(analyze(h, {.truncate_depth = 1}).report.h, 2u);
  EXPECT_EQ(analyze(h, {.lift = true}).mode, ReportMode::kLifted);
  EXPECT_EQ(analyze(h, {.flat = FlatSource::kLeaves}).mode, ReportMode::kFlat);
  EXPECT_THROW(analyze(h, {.lift = true, .flat = FlatSource::kDirect}), Error);
  EXPECT_EQ(analyze(h, {.subtree = "Y"}).report.h, 2u);
  // Truncation happens before lifting: the cut nodes become lifted leaves.
  auto lifted_cut = analyze(h, {.truncate_depth = 1, .lift = true});
  EXPECT_EQ(lifted_cut.report.nodes, 4u);
}

}  // namespace
}  // namespace hindex
