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

#ifndef HINDEX_GENERATOR_HPP_
#define HINDEX_GENERATOR_HPP_

#include <cstdint>
#include <random>
#include <variant>
#include <vector>

#include "hindex/hierarchy.hpp"

namespace hindex {

// Citations drawn uniformly from [lo, hi].
struct UniformCitations {
  std::int64_t lo = 0;
  std::int64_t hi = 10;
};

// Citations k - 1 where k in [1, max] has probability proportional to k^-s.
struct ZipfCitations {
  double s = 1.1;
  std::uint64_t max = 10000;
};

using CitationDistribution = std::variant<UniformCitations, ZipfCitations>;

struct GeneratorParams {
  std::uint64_t seed = 1;
  std::uint64_t nodes = 1;
  std::uint64_t max_children = 8;
  std::uint64_t roots = 1;
  CitationDistribution citations = UniformCitations{};
  // When false only leaves carry direct citations.
  bool internal_citations = false;
};

// Deterministic random forest. Randomness comes from std::mt19937_64, whose
// output sequence is fixed by the C++ standard; the mapping to integers and
// reals is done here rather than by std:: distributions, which vary between
// standard libraries.
//
// Node i (ids "n" + zero-padded i) is a root for i < roots; otherwise its
// parent is drawn uniformly from the earlier nodes that still have fewer than
// max_children children.
//
// Throws Error(kInvalidDistributionParams).
std::vector<NodeEntry> generate_synthetic_entries(const GeneratorParams& params);
RankedHierarchy generate_synthetic(const GeneratorParams& params);

// The integer and real draws used by the generator.
class PinnedRandom {
 public:
  explicit PinnedRandom(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  // Uniform in [0, bound), bound > 0, by rejection.
  std::uint64_t below(std::uint64_t bound);
  // Uniform in [0, 1) with 53 random bits.
  double unit();

 private:
  std::mt19937_64 engine_;
};

}  // namespace hindex

#endif  // HINDEX_GENERATOR_HPP_
