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

#include "hindex/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <future>
#include <iostream>
#include <iterator>
#include <sstream>

#include "hindex/error.hpp"
#include "hindex/formats.hpp"
#include "hindex/generator.hpp"
#include "hindex/oracle.hpp"
#include "hindex/pipeline.hpp"

namespace hindex::cli {
namespace {

struct GenFlags {
  std::uint64_t seed = 1;
  std::int64_t nodes = 0;
  std::int64_t max_children = 8;
  std::int64_t roots = 1;
  std::string dist = "uniform";
  std::int64_t lo = 0;
  std::int64_t hi = 10;
  double zipf_s = 1.1;
  std::int64_t zipf_max = 10000;
  bool internal_citations = false;

  void add_to(CLI::App& app) {
    app.add_option("--seed", seed, "Generator seed");
    app.add_option("--nodes", nodes, "Number of nodes");
    app.add_option("--max-children", max_children, "Maximum children per node");
    app.add_option("--roots", roots, "Number of roots");
    app.add_option("--dist", dist, "Citation distribution")
        ->check(CLI::IsMember({"uniform", "zipf"}));
    app.add_option("--lo", lo, "Uniform lower bound");
    app.add_option("--hi", hi, "Uniform upper bound");
    app.add_option("--zipf-s", zipf_s, "Zipf exponent");
    app.add_option("--zipf-max", zipf_max, "Zipf support size");
    app.add_flag("--internal-citations", internal_citations,
                 "Give internal nodes direct citations too");
  }

  GeneratorParams params() const {
    auto count = [](std::int64_t v, const char* what) {
      if (v < 1) {
        throw Error(ErrorCode::kInvalidDistributionParams,
                    std::string(what) + " must be at least 1");
      }
      return static_cast<std::uint64_t>(v);
    };
    GeneratorParams p;
    p.seed = seed;
    p.nodes = count(nodes, "--nodes");
    p.max_children = count(max_children, "--max-children");
    p.roots = count(roots, "--roots");
    if (dist == "zipf") {
      p.citations = ZipfCitations{zipf_s, count(zipf_max, "--zipf-max")};
    } else {
      p.citations = UniformCitations{lo, hi};
    }
    p.internal_citations = internal_citations;
    return p;
  }
};

std::string read_input(const std::string& path, std::istream& in) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(in), {});
  }
  std::ifstream file(path, std::ios::binary);
  if (!file) throw Error(ErrorCode::kParseError, "cannot open input '" + path + "'");
  return std::string(std::istreambuf_iterator<char>(file), {});
}

void write_output(const std::string& path, const std::string& bytes, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << bytes;
    out.flush();
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw Error(ErrorCode::kParseError, "cannot open output '" + path + "'");
  file << bytes;
}

InputFormat resolve_format(const std::string& flag, std::string_view bytes) {
  if (flag == "tsv") return InputFormat::kNodesTable;
  if (flag == "json") return InputFormat::kTreeDocument;
  return detect_format(bytes);
}

std::vector<std::string> split_commas(const std::vector<std::string>& values) {
  std::vector<std::string> out;
  for (const std::string& v : values) {
    std::stringstream ss(v);
    std::string item;
    while (std::getline(ss, item, ',')) {
      if (!item.empty()) out.push_back(item);
    }
  }
  return out;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Maximal h-index of citation hierarchies"};
  app.require_subcommand(1);

  std::string input;
  std::string format = "auto";
  std::string output;

  auto* compute = app.add_subcommand("compute", "Compute the h-index of a hierarchy");
  std::vector<std::string> subtrees;
  std::optional<std::size_t> truncate_depth;
  std::vector<std::string> truncate_labels;
  bool lift = false, flat = false, leaves_only = false, no_prune = false, trace = false;
  compute->add_option("--input", input, "Input path, '-' for stdin")->required();
  compute->add_option("--format", format, "Input format")
      ->check(CLI::IsMember({"auto", "tsv", "json"}));
  compute->add_option("--subtree", subtrees, "Analyze the subtree under this id (repeatable)");
  compute->add_option("--truncate-depth", truncate_depth, "Drop nodes deeper than this");
  compute->add_option("--truncate-labels", truncate_labels,
                      "Cut at nodes with these labels (comma-separated)");
  compute->add_flag("--lift", lift, "Lift internal nodes before computing");
  compute->add_flag("--flat", flat, "Classic h-index over direct citations of all nodes");
  compute->add_flag("--leaves-only", leaves_only, "Classic h-index over leaf ranks");
  compute->add_flag("--no-prune", no_prune, "Disable child pruning");
  compute->add_flag("--trace", trace, "Include the per-level trace");
  compute->add_option("--output", output, "Output path, '-' for stdout");

  auto* oracle = app.add_subcommand("oracle", "Check the fast path against an oracle");
  std::string oracle_mode = "full";
  GenFlags oracle_gen;
  oracle->add_option("--mode", oracle_mode, "full: every antichain; levels: per-rank scan")
      ->check(CLI::IsMember({"full", "levels"}));
  oracle->add_option("--input", input, "Input path; omit to generate");
  oracle->add_option("--format", format, "Input format")
      ->check(CLI::IsMember({"auto", "tsv", "json"}));
  oracle_gen.add_to(*oracle);

  auto* gen = app.add_subcommand("gen", "Write a synthetic hierarchy");
  GenFlags gen_flags;
  std::string gen_format = "tsv";
  gen_flags.add_to(*gen);
  gen->add_option("--format", gen_format, "Output format")
      ->check(CLI::IsMember({"tsv", "json"}));
  gen->add_option("--output", output, "Output path, '-' for stdout");

  std::vector<const char*> argv{"hindex"};
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kExitOk;
    }
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }

  try {
    if (compute->parsed()) {
      if (lift && (flat || leaves_only)) {
        throw Error(ErrorCode::kInvalidArgument, "--lift cannot be combined with flat modes");
      }
      if (flat && leaves_only) {
        throw Error(ErrorCode::kInvalidArgument, "--flat and --leaves-only are exclusive");
      }
      const std::string bytes = read_input(input, in);
      const std::string digest = input_digest(bytes);
      const RankedHierarchy h = parse_hierarchy(bytes, resolve_format(format, bytes));

      AnalysisOptions options;
      options.truncate_depth = truncate_depth;
      for (auto& label : split_commas(truncate_labels)) options.truncate_labels.insert(label);
      options.lift = lift;
      options.flat = flat ? FlatSource::kDirect
                          : (leaves_only ? FlatSource::kLeaves : FlatSource::kNone);
      options.compute = {.prune = !no_prune, .trace = trace};

      auto render = [&](std::optional<std::string> root) {
        AnalysisOptions o = options;
        o.subtree = std::move(root);
        Analysis a = analyze(h, o);
        return write_report(a.report, a.mode, digest);
      };
      std::string doc;
      if (subtrees.size() <= 1) {
        doc = render(subtrees.empty() ? std::nullopt
                                      : std::optional<std::string>(subtrees.front()));
      } else {
        // Independent subtrees of the shared, immutable hierarchy.
        std::vector<std::future<std::string>> jobs;
        for (const std::string& root : subtrees) {
          jobs.push_back(std::async(std::launch::async, render, root));
        }
        doc = "[\n";
        for (std::size_t i = 0; i < jobs.size(); ++i) {
          std::string one = jobs[i].get();
          one.pop_back();  // trailing newline
          doc += one;
          doc += i + 1 < jobs.size() ? ",\n" : "\n";
        }
        doc += "]\n";
      }
      write_output(output, doc, out);
      return kExitOk;
    }

    if (oracle->parsed()) {
      RankedHierarchy h;
      if (!input.empty()) {
        const std::string bytes = read_input(input, in);
        h = parse_hierarchy(bytes, resolve_format(format, bytes));
      } else {
        h = generate_synthetic(oracle_gen.params());
      }
      const AntichainReport fast = max_h_antichain(h);
      const oracle::OracleResult slow = oracle_mode == "full"
                                            ? oracle::brute_force_max_h(h)
                                            : oracle::level_scan_max_h(h);
      const bool agree = fast.h == slow.h;
      out << "nodes=" << h.size() << " fast_h=" << fast.h << " oracle_h=" << slow.h
          << " mode=" << oracle_mode << " examined=" << slow.antichains_examined << " "
          << (agree ? "agree" : "DISAGREE") << "\n";
      if (!agree) {
        err << "error: fast path and oracle disagree\n";
        return kExitDisagreement;
      }
      return kExitOk;
    }

    if (gen->parsed()) {
      const RankedHierarchy h = generate_synthetic(gen_flags.params());
      write_output(output, gen_format == "json" ? write_tree_document(h) : write_nodes_table(h),
                   out);
      return kExitOk;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.code() == ErrorCode::kInternal ? kExitInternal : kExitInput;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitInternal;
}

}  // namespace hindex::cli
