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

#ifndef HINDEX_FORMATS_HPP_
#define HINDEX_FORMATS_HPP_

#include <string>
#include <string_view>

#include "hindex/hierarchy.hpp"

namespace hindex {

// Tab-separated nodes table:
//
//   id<TAB>parent<TAB>citations<TAB>label
//   R<TAB>-<TAB>0<TAB>root
//   X<TAB>R<TAB>3<TAB>
//
// "-" or an empty parent marks a root; the label column may be empty or
// omitted. Blank lines are skipped. CRLF line endings are accepted.
inline constexpr std::string_view kNodesTableHeader = "id\tparent\tcitations\tlabel";

enum class InputFormat { kNodesTable, kTreeDocument };

// Errors: ParseError and NegativeCitations with a line number, then every
// build_hierarchy error.
RankedHierarchy parse_nodes_table(std::string_view bytes);
std::string write_nodes_table(const RankedHierarchy& h);

// Nested JSON tree: {"id": ..., "citations": ..., "label": ..., "children": [...]}.
// A forest is a top-level array of such objects. "label" and "children" are
// optional.
RankedHierarchy parse_tree_document(std::string_view bytes);
// A single root is written as an object, a forest as an array.
std::string write_tree_document(const RankedHierarchy& h);

// Chooses the format from the first non-blank character ('{' or '[' means
// a tree document).
InputFormat detect_format(std::string_view bytes);
RankedHierarchy parse_hierarchy(std::string_view bytes, InputFormat format);

}  // namespace hindex

#endif  // HINDEX_FORMATS_HPP_
