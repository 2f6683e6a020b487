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

#include "hindex/formats.hpp"

#include <charconv>
#include <nlohmann/json.hpp>
#include <vector>

#include "hindex/error.hpp"

namespace hindex {
namespace {

using nlohmann::json;

std::vector<std::string_view> split_tabs(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    auto tab = line.find('\t', start);
    if (tab == std::string_view::npos) {
      fields.push_back(line.substr(start));
      return fields;
    }
    fields.push_back(line.substr(start, tab - start));
    start = tab + 1;
  }
}

std::int64_t parse_citations(std::string_view text, std::size_t line_no) {
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
    throw Error(ErrorCode::kParseError,
                "citations '" + std::string(text) + "' is not an integer", line_no);
  }
  if (value < 0) {
    throw Error(ErrorCode::kNegativeCitations,
                "citations must be non-negative, got " + std::string(text), line_no);
  }
  return value;
}

}  // namespace

RankedHierarchy parse_nodes_table(std::string_view bytes) {
  std::vector<NodeEntry> entries;
  std::size_t line_no = 0;
  bool saw_header = false;
  std::size_t pos = 0;
  while (pos < bytes.size()) {
    auto end = bytes.find('\n', pos);
    if (end == std::string_view::npos) end = bytes.size();
    std::string_view line = bytes.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (!saw_header) {
      if (line != kNodesTableHeader) {
        throw Error(ErrorCode::kParseError,
                    "expected header 'id<TAB>parent<TAB>citations<TAB>label'", line_no);
      }
      saw_header = true;
      continue;
    }
    if (line.empty()) continue;
    auto fields = split_tabs(line);
    if (fields.size() < 3 || fields.size() > 4) {
      throw Error(ErrorCode::kParseError,
                  "expected 3 or 4 tab-separated fields, got " +
                      std::to_string(fields.size()),
                  line_no);
    }
    NodeEntry e;
    e.id = std::string(fields[0]);
    if (!is_valid_id(e.id)) {
      throw Error(ErrorCode::kParseError, "empty node id", line_no);
    }
    if (!fields[1].empty() && fields[1] != "-") e.parent = std::string(fields[1]);
    e.citations = parse_citations(fields[2], line_no);
    if (fields.size() == 4 && !fields[3].empty()) e.label = std::string(fields[3]);
    entries.push_back(std::move(e));
  }
  if (!saw_header) throw Error(ErrorCode::kParseError, "empty input", 1);
  return build_hierarchy(std::move(entries), RankMode::kAggregated);
}

std::string write_nodes_table(const RankedHierarchy& h) {
  std::string out(kNodesTableHeader);
  out += '\n';
  for (NodeIndex v = 0; v < h.size(); ++v) {
    const Node& node = h.node(v);
    out += node.id.str();
    out += '\t';
    out += node.parent ? h.id(*node.parent).str() : std::string("-");
    out += '\t';
    out += std::to_string(node.direct_citations);
    out += '\t';
    if (node.label) out += *node.label;
    out += '\n';
  }
  return out;
}

namespace {

void collect_tree(const json& doc, const std::optional<std::string>& parent,
                  std::vector<NodeEntry>& out) {
  // Explicit stack: taxonomies can be deeper than the call stack allows.
  std::vector<std::pair<const json*, std::optional<std::string>>> stack{{&doc, parent}};
  while (!stack.empty()) {
    auto [node, parent_id] = stack.back();
    stack.pop_back();
    if (!node->is_object()) throw Error(ErrorCode::kParseError, "tree node is not an object");
    auto id = node->find("id");
    if (id == node->end() || !id->is_string()) {
      throw Error(ErrorCode::kParseError, "tree node without a string \"id\"");
    }
    NodeEntry e;
    e.id = id->get<std::string>();
    e.parent = parent_id;
    if (auto c = node->find("citations"); c != node->end()) {
      if (c->is_number_unsigned()) {
        e.citations = static_cast<std::int64_t>(c->get<std::uint64_t>());
      } else if (c->is_number_integer()) {
        e.citations = c->get<std::int64_t>();
        if (e.citations < 0) {
          throw Error(ErrorCode::kNegativeCitations,
                      "node '" + e.id + "' has negative citations");
        }
      } else {
        throw Error(ErrorCode::kParseError, "citations of '" + e.id + "' is not an integer");
      }
    }
    if (auto l = node->find("label"); l != node->end() && !l->is_null()) {
      if (!l->is_string()) throw Error(ErrorCode::kParseError, "label of '" + e.id + "' is not a string");
      e.label = l->get<std::string>();
    }
    if (auto kids = node->find("children"); kids != node->end()) {
      if (!kids->is_array()) {
        throw Error(ErrorCode::kParseError, "children of '" + e.id + "' is not an array");
      }
      for (auto it = kids->rbegin(); it != kids->rend(); ++it) stack.emplace_back(&*it, e.id);
    }
    out.push_back(std::move(e));
  }
}

}  // namespace

RankedHierarchy parse_tree_document(std::string_view bytes) {
  json doc;
  try {
    doc = json::parse(bytes.begin(), bytes.end());
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::kParseError, e.what());
  }
  std::vector<NodeEntry> entries;
  if (doc.is_array()) {
    for (const json& root : doc) collect_tree(root, std::nullopt, entries);
  } else {
    collect_tree(doc, std::nullopt, entries);
  }
  return build_hierarchy(std::move(entries), RankMode::kAggregated);
}

std::string write_tree_document(const RankedHierarchy& h) {
  std::vector<json> built(h.size());
  auto order = h.preorder();
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const NodeIndex v = *it;
    json node = json::object();
    node["id"] = h.id(v).str();
    node["citations"] = h.node(v).direct_citations;
    if (h.node(v).label) node["label"] = *h.node(v).label;
    json kids = json::array();
    for (NodeIndex c : h.children(v)) kids.push_back(std::move(built[c]));
    node["children"] = std::move(kids);
    built[v] = std::move(node);
  }
  json doc;
  if (h.roots().size() == 1) {
    doc = std::move(built[h.roots()[0]]);
  } else {
    doc = json::array();
    for (NodeIndex r : h.roots()) doc.push_back(std::move(built[r]));
  }
  return doc.dump() + "\n";
}

InputFormat detect_format(std::string_view bytes) {
  auto first = bytes.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && (bytes[first] == '{' || bytes[first] == '[')) {
    return InputFormat::kTreeDocument;
  }
  return InputFormat::kNodesTable;
}

RankedHierarchy parse_hierarchy(std::string_view bytes, InputFormat format) {
  return format == InputFormat::kTreeDocument ? parse_tree_document(bytes)
                                              : parse_nodes_table(bytes);
}

}  // namespace hindex
