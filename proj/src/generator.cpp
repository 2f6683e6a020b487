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

#include "hindex/generator.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "hindex/error.hpp"

namespace hindex {

std::uint64_t PinnedRandom::below(std::uint64_t bound) {
  // Values below `threshold` would bias the modulo.
  const std::uint64_t threshold = (0 - bound) % bound;
  while (true) {
    const std::uint64_t x = engine_();
    if (x >= threshold) return x % bound;
  }
}

double PinnedRandom::unit() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

namespace {

constexpr std::uint64_t kMaxZipfSupport = 10'000'000;

void validate(const GeneratorParams& p) {
  auto fail = [](const std::string& what) {
    throw Error(ErrorCode::kInvalidDistributionParams, what);
  };
  if (p.nodes < 1) fail("nodes must be at least 1");
  if (p.nodes > std::numeric_limits<NodeIndex>::max()) fail("too many nodes");
  if (p.max_children < 1) fail("max_children must be at least 1");
  if (p.roots < 1 || p.roots > p.nodes) fail("roots must be in [1, nodes]");
  if (const auto* u = std::get_if<UniformCitations>(&p.citations)) {
    if (u->lo < 0 || u->lo > u->hi) fail("uniform citations need 0 <= lo <= hi");
  } else {
    const auto& z = std::get<ZipfCitations>(p.citations);
    if (!(z.s > 0.0) || !std::isfinite(z.s)) fail("zipf exponent must be positive");
    if (z.max < 1 || z.max > kMaxZipfSupport) fail("zipf max must be in [1, 10^7]");
  }
}

class CitationSampler {
 public:
  explicit CitationSampler(const CitationDistribution& dist) : dist_(dist) {
    if (const auto* z = std::get_if<ZipfCitations>(&dist)) {
      cdf_.resize(z->max);
      double total = 0.0;
      for (std::uint64_t k = 1; k <= z->max; ++k) {
        total += std::pow(static_cast<double>(k), -z->s);
        cdf_[k - 1] = total;
      }
      for (double& c : cdf_) c /= total;
    }
  }

  std::int64_t draw(PinnedRandom& rng) const {
    if (const auto* u = std::get_if<UniformCitations>(&dist_)) {
      const auto span = static_cast<std::uint64_t>(u->hi - u->lo) + 1;
      return u->lo + static_cast<std::int64_t>(rng.below(span));
    }
    const double x = rng.unit();
    auto it = std::upper_bound(cdf_.begin(), cdf_.end(), x);
    if (it == cdf_.end()) --it;
    return it - cdf_.begin();  // k - 1
  }

 private:
  CitationDistribution dist_;
  std::vector<double> cdf_;
};

}  // namespace

std::vector<NodeEntry> generate_synthetic_entries(const GeneratorParams& params) {
  validate(params);
  const std::uint64_t n = params.nodes;
  const std::size_t width = std::to_string(n - 1).size();
  auto name = [width](std::uint64_t i) {
    std::string digits = std::to_string(i);
    return "n" + std::string(width - digits.size(), '0') + digits;
  };

  PinnedRandom rng(params.seed);
  std::vector<std::int64_t> parent(n, -1);
  std::vector<std::uint64_t> child_count(n, 0);
  std::vector<NodeIndex> open;
  for (std::uint64_t i = 0; i < n; ++i) {
    if (i >= params.roots) {
      const std::uint64_t slot = rng.below(open.size());
      const NodeIndex p = open[slot];
      parent[i] = p;
      if (++child_count[p] == params.max_children) {
        open[slot] = open.back();
        open.pop_back();
      }
    }
    open.push_back(static_cast<NodeIndex>(i));
  }

  CitationSampler sampler(params.citations);
  std::vector<NodeEntry> entries(n);
  for (std::uint64_t i = 0; i < n; ++i) {
    NodeEntry& e = entries[i];
    e.id = name(i);
    if (parent[i] >= 0) e.parent = name(static_cast<std::uint64_t>(parent[i]));
    e.citations = sampler.draw(rng);
    if (!params.internal_citations && child_count[i] > 0) e.citations = 0;
  }
  return entries;
}

RankedHierarchy generate_synthetic(const GeneratorParams& params) {
  return build_hierarchy(generate_synthetic_entries(params), RankMode::kAggregated);
}

}  // namespace hindex
