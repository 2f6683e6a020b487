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

#ifndef HINDEX_CLI_HPP_
#define HINDEX_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace hindex::cli {

// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInternal = 1;
inline constexpr int kExitInput = 2;
inline constexpr int kExitDisagreement = 3;

// Runs one command. `args` excludes the program name, e.g.
// {"compute", "--input", "e3.tsv"}. Reports go to `out` unless an output path
// is given; diagnostics go to `err`. "-" reads `in` / writes `out`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace hindex::cli

#endif  // HINDEX_CLI_HPP_
