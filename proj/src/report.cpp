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

#include <openssl/evp.h>

#include <array>
#include <charconv>
#include <nlohmann/json.hpp>

#include "hindex/error.hpp"

namespace hindex {

std::string_view to_string(ReportMode mode) {
  switch (mode) {
    case ReportMode::kFull: return "full";
    case ReportMode::kFlat: return "flat";
    case ReportMode::kLifted: return "lifted";
    case ReportMode::kTruncated: return "truncated";
  }
  return "full";
}

std::string input_digest(std::string_view bytes) {
  std::string canonical;
  canonical.reserve(bytes.size());
  for (std::size_t i = 0; i < bytes.size(); ++i) {
    if (bytes[i] == '\r' && i + 1 < bytes.size() && bytes[i + 1] == '\n') continue;
    canonical += bytes[i];
  }
  std::array<unsigned char, EVP_MAX_MD_SIZE> md{};
  unsigned int md_len = 0;
  if (EVP_Digest(canonical.data(), canonical.size(), md.data(), &md_len, EVP_sha256(),
                 nullptr) != 1) {
    throw Error(ErrorCode::kInternal, "sha256 failed");
  }
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out = "sha256:";
  for (unsigned int i = 0; i < md_len; ++i) {
    out += kHex[md[i] >> 4];
    out += kHex[md[i] & 0xf];
  }
  return out;
}

namespace {

std::string json_string(std::string_view s) { return nlohmann::json(s).dump(); }

// Shortest text that reads back to the same double.
std::string real(double x) {
  std::array<char, 64> buf{};
  auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), x);
  return std::string(buf.data(), ptr);
}

}  // namespace

std::string write_report(const AntichainReport& report, ReportMode mode,
                         std::string_view digest) {
  std::string out = "{\n";
  auto field = [&](std::string_view key, const std::string& value, bool last = false) {
    out += "  ";
    out += json_string(key);
    out += ": ";
    out += value;
    out += last ? "\n" : ",\n";
  };
  field("schema_version", std::to_string(kReportSchemaVersion));
  field("input_digest", json_string(digest));
  field("mode", json_string(to_string(mode)));
  field("h", std::to_string(report.h));
  std::string members = "[";
  for (std::size_t i = 0; i < report.antichain.size(); ++i) {
    if (i > 0) members += ", ";
    members += json_string(report.antichain.members()[i].str());
  }
  members += "]";
  field("antichain", members);
  field("median_rank", report.median_rank.to_string());
  field("max_rank", std::to_string(report.max_rank));
  field("nodes", std::to_string(report.nodes));
  field("visited", std::to_string(report.visited));
  field("digested", std::to_string(report.digested));
  field("total_citations", std::to_string(report.total_citations));
  const bool has_trace = !report.trace.empty();
  field("sqrt_ratio", real(report.sqrt_ratio), !has_trace);
  if (has_trace) {
    std::string trace = "[\n";
    for (std::size_t i = 0; i < report.trace.size(); ++i) {
      const auto& t = report.trace[i];
      trace += "    {\"level\": " + std::to_string(t.level) +
               ", \"size\": " + std::to_string(t.size) +
               ", \"h\": " + std::to_string(t.h_at_level) + "}";
      trace += i + 1 < report.trace.size() ? ",\n" : "\n";
    }
    trace += "  ]";
    field("trace", trace, true);
  }
  out += "}\n";
  return out;
}

}  // namespace hindex
