// Copyright 2026 The signbal Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// signbal command-line front end.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "signbal/signbal.h"

namespace fs = std::filesystem;
using nlohmann::ordered_json;

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitMissingInput = 2;
constexpr int kExitNoTriads = 3;

struct Failure {
  int code;
  std::string message;
};

struct GraphDeleter {
  void operator()(sb_graph* g) const { sb_graph_free(g); }
};
using Graph = std::unique_ptr<sb_graph, GraphDeleter>;

struct CString {
  char* p = nullptr;
  ~CString() { sb_string_free(p); }
  std::string str() const { return p ? std::string(p) : std::string(); }
};

void check(sb_status status, const std::string& what) {
  if (status != SB_OK) {
    throw Failure{kExitFailure, what + ": " + sb_status_string(status) + ": " + sb_last_error()};
  }
}

struct Options {
  std::string input;
  std::string format = "tsv-sign";
  double threshold = 0.0;
  std::string aggregate = "sum";
  bool no_prune = false;
  std::string component = "giant";
  std::string balance_mode = "type-mean";
  std::string out;
  std::vector<std::string> emit{"json", "csv"};
  std::vector<std::string> analyses{"census", "balance", "composition", "metrics",
                                    "undirected-compare"};
  std::string network;
};

const std::map<std::string, sb_format> kFormats{{"csv-rating", SB_FORMAT_CSV_RATING},
                                                {"tsv-sign", SB_FORMAT_TSV_SIGN},
                                                {"signed-matrix", SB_FORMAT_SIGNED_MATRIX}};
const std::map<std::string, sb_aggregate> kAggregates{
    {"sum", SB_AGGREGATE_SUM}, {"last", SB_AGGREGATE_LAST}, {"mean", SB_AGGREGATE_MEAN}};
const std::map<std::string, sb_component> kComponents{{"giant", SB_COMPONENT_GIANT},
                                                      {"all", SB_COMPONENT_ALL}};
const std::map<std::string, sb_balance_mode> kModes{{"type-mean", SB_BALANCE_TYPE_MEAN},
                                                    {"triad-mean", SB_BALANCE_TRIAD_MEAN}};

void add_input_options(CLI::App* cmd, Options& o) {
  cmd->add_option("--input", o.input, "Input file");
  cmd->add_option("--format", o.format, "Input format")
      ->check(CLI::IsMember({"csv-rating", "tsv-sign", "signed-matrix"}))
      ->capture_default_str();
  cmd->add_option("--threshold", o.threshold, "Values above are positive, below negative")
      ->capture_default_str();
  cmd->add_option("--aggregate", o.aggregate, "Rule for repeated source/target records")
      ->check(CLI::IsMember({"sum", "last", "mean"}))
      ->capture_default_str();
  cmd->add_flag("--no-prune-pendants", o.no_prune, "Keep nodes of total degree 1");
  cmd->add_option("--component", o.component, "Component kept after loading")
      ->check(CLI::IsMember({"giant", "all"}))
      ->capture_default_str();
}

void add_report_options(CLI::App* cmd, Options& o) {
  cmd->add_option("--balance-mode", o.balance_mode, "Aggregation for the overall ratio")
      ->check(CLI::IsMember({"type-mean", "triad-mean"}))
      ->capture_default_str();
  cmd->add_option("--emit", o.emit, "Report formats")
      ->delimiter(',')
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  cmd->add_option("--network", o.network, "Row label in CSV reports (default: input stem)");
}

sb_preprocess_config config_of(const Options& o) {
  sb_preprocess_config c = sb_preprocess_config_default();
  c.sign_threshold = o.threshold;
  c.aggregate = kAggregates.at(o.aggregate);
  c.prune_pendants = o.no_prune ? 0 : 1;
  c.keep_component = kComponents.at(o.component);
  return c;
}

struct Loaded {
  Graph raw;
  Graph graph;
};

Loaded load(const Options& o) {
  if (o.input.empty()) throw Failure{kExitMissingInput, "missing --input"};
  std::error_code ec;
  if (!fs::is_regular_file(o.input, ec)) {
    throw Failure{kExitMissingInput, "input not found: " + o.input};
  }
  const sb_preprocess_config cfg = config_of(o);
  sb_graph* raw = nullptr;
  check(sb_graph_load_file(o.input.c_str(), kFormats.at(o.format), &cfg, &raw),
        "loading " + o.input);
  Loaded out;
  out.raw.reset(raw);
  sb_graph* pre = nullptr;
  check(sb_graph_preprocess(raw, &cfg, &pre), "preprocessing");
  out.graph.reset(pre);
  return out;
}

void write_file(const fs::path& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  f << content;
  if (!f) throw Failure{kExitFailure, "cannot write " + path.string()};
}

std::string network_name(const Options& o) {
  return o.network.empty() ? fs::path(o.input).stem().string() : o.network;
}

std::string utc_timestamp() {
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

ordered_json counts_of(const sb_graph* g) {
  return {{"nodes", sb_graph_node_count(g)},
          {"edges", sb_graph_edge_count(g)},
          {"components", sb_graph_component_count(g)}};
}

std::string render(const sb_graph* g, sb_report_kind kind, const Options& o,
                   const std::string& format) {
  CString s;
  const sb_balance_mode mode = kModes.at(o.balance_mode);
  if (format == "json") {
    check(sb_report_json(g, kind, mode, &s.p), "rendering report");
  } else {
    const std::string name = network_name(o);
    check(sb_report_csv(g, kind, mode, name.c_str(), &s.p), "rendering report");
  }
  return s.str();
}

bool wants(const std::vector<std::string>& list, const std::string& item) {
  return std::find(list.begin(), list.end(), item) != list.end();
}

int run_analyze(const Options& o) {
  if (o.analyses.empty()) throw Failure{kExitFailure, "select at least one analysis"};
  Loaded in = load(o);
  const fs::path out_dir = o.out.empty() ? fs::path(".") : fs::path(o.out);
  std::error_code ec;
  fs::create_directories(out_dir, ec);
  if (ec) throw Failure{kExitFailure, "cannot create " + out_dir.string()};

  CString sha;
  check(sb_sha256_file(o.input.c_str(), &sha.p), "checksum");
  CString tsv;
  check(sb_graph_dump_tsv(in.graph.get(), &tsv.p), "dumping graph");
  write_file(out_dir / "graph.tsv", tsv.str());

  ordered_json manifest;
  manifest["tool"] = "signbal";
  manifest["version"] = sb_version();
  manifest["timestamp"] = utc_timestamp();
  manifest["config"] = {{"input", o.input},
                        {"format", o.format},
                        {"threshold", o.threshold},
                        {"aggregate", o.aggregate},
                        {"prune_pendants", !o.no_prune},
                        {"component", o.component},
                        {"balance_mode", o.balance_mode},
                        {"analyses", o.analyses},
                        {"emit", o.emit}};
  manifest["input_sha256"] = sha.str();
  manifest["before"] = counts_of(in.raw.get());
  manifest["after"] = counts_of(in.graph.get());
  manifest["preprocessed_graph"] = "graph.tsv";

  int status = 0;
  std::string diagnostic;
  if (wants(o.analyses, "balance")) {
    sb_balance_summary b{};
    check(sb_balance(in.graph.get(), &b), "balance");
    const auto triads = b.type_triads[0] + b.type_triads[1] + b.type_triads[2] + b.type_triads[3];
    if (triads == 0) {
      status = kExitNoTriads;
      diagnostic = "no transitive triads after preprocessing (" +
                   std::to_string(sb_graph_node_count(in.graph.get())) + " nodes, " +
                   std::to_string(sb_graph_edge_count(in.graph.get())) +
                   " edges): balance is undefined";
    }
  }

  ordered_json reports = ordered_json::array();
  if (status == 0) {
    const std::vector<std::pair<std::string, sb_report_kind>> kinds{
        {"census", SB_REPORT_CENSUS},
        {"balance", SB_REPORT_BALANCE},
        {"composition", SB_REPORT_COMPOSITION},
        {"metrics", SB_REPORT_METRICS},
        {"undirected-compare", SB_REPORT_COMPARE}};
    for (const auto& [name, kind] : kinds) {
      if (!wants(o.analyses, name)) continue;
      const std::string stem = name == "undirected-compare" ? "compare" : name;
      for (const auto& fmt : o.emit) {
        const std::string file = stem + "." + fmt;
        write_file(out_dir / file, render(in.graph.get(), kind, o, fmt));
        reports.push_back(file);
      }
    }
  }
  manifest["reports"] = reports;
  manifest["exit_status"] = status;
  write_file(out_dir / "manifest.json", manifest.dump(2) + "\n");
  if (status != 0) std::cerr << "signbal: " << diagnostic << "\n";
  return status;
}

int run_census(const Options& o) {
  Loaded in = load(o);
  std::cout << render(in.graph.get(), SB_REPORT_CENSUS, o, "csv");
  return 0;
}

int run_compare(const Options& o) {
  Loaded in = load(o);
  const std::string csv = render(in.graph.get(), SB_REPORT_COMPARE, o, "csv");
  const std::string json = render(in.graph.get(), SB_REPORT_COMPARE, o, "json");
  if (!o.out.empty()) {
    std::error_code ec;
    fs::create_directories(o.out, ec);
    if (wants(o.emit, "csv")) write_file(fs::path(o.out) / "compare.csv", csv);
    if (wants(o.emit, "json")) write_file(fs::path(o.out) / "compare.json", json);
  }
  std::cout << csv;
  const auto parsed = ordered_json::parse(json);
  std::cout << parsed["verdict"].get<std::string>() << "\n";
  std::cout << "canceled pairs: " << parsed["canceled_pairs"].size()
            << ", undirected-only triangles: " << parsed["undirected_only_triangles"].size()
            << ", directed-only triads: " << parsed["directed_only_triads"].size() << "\n";
  return 0;
}

struct RandomOptions {
  std::size_t nodes = 20;
  double edge_prob = 0.3;
  double neg_prob = 0.3;
  std::uint64_t seed = 1;
  std::size_t count = 1;
  std::string output;
};

void add_random_options(CLI::App* cmd, RandomOptions& r) {
  cmd->add_option("--nodes", r.nodes, "Node count")->capture_default_str();
  cmd->add_option("--edge-prob", r.edge_prob, "Arc probability per ordered pair")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  cmd->add_option("--neg-prob", r.neg_prob, "Probability an arc is negative")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  cmd->add_option("--seed", r.seed, "Generator seed")->capture_default_str();
}

int run_gen_random(const RandomOptions& r) {
  sb_graph* g = nullptr;
  check(sb_graph_random(r.nodes, r.edge_prob, r.neg_prob, r.seed, &g), "generating graph");
  Graph owned(g);
  CString tsv;
  check(sb_graph_dump_tsv(g, &tsv.p), "dumping graph");
  if (r.output.empty()) {
    std::cout << tsv.str();
  } else {
    write_file(r.output, tsv.str());
  }
  return 0;
}

int run_oracle_check(const Options& o, const RandomOptions& r) {
  std::vector<Graph> graphs;
  std::vector<std::string> names;
  if (!o.input.empty()) {
    graphs.push_back(std::move(load(o).graph));
    names.push_back(o.input);
  } else {
    for (std::size_t i = 0; i < r.count; ++i) {
      sb_graph* g = nullptr;
      check(sb_graph_random(r.nodes, r.edge_prob, r.neg_prob, r.seed + i, &g), "generating");
      graphs.emplace_back(g);
      names.push_back("seed " + std::to_string(r.seed + i));
    }
  }
  std::size_t total = 0;
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    std::size_t mismatches = 0;
    CString details;
    check(sb_oracle_check(graphs[i].get(), &mismatches, &details.p), "oracle check");
    total += mismatches;
    if (mismatches > 0) std::cout << names[i] << ":\n" << details.str();
  }
  std::cout << graphs.size() << " graph(s), " << total << " mismatch(es)\n";
  return total == 0 ? 0 : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Structural balance analysis of signed directed networks"};
  app.set_version_flag("--version", std::string(sb_version()));
  app.require_subcommand(1);

  Options analyze_opts;
  auto* analyze = app.add_subcommand("analyze", "Preprocess a network and write reports");
  add_input_options(analyze, analyze_opts);
  add_report_options(analyze, analyze_opts);
  analyze->add_option("--out", analyze_opts.out, "Output directory (default: current)");
  analyze->add_option("--analyses", analyze_opts.analyses, "Analyses to run")
      ->delimiter(',')
      ->check(CLI::IsMember(
          {"census", "balance", "composition", "metrics", "undirected-compare"}))
      ->capture_default_str();

  Options census_opts;
  auto* census = app.add_subcommand("census", "Print the 16-class triad census as CSV");
  add_input_options(census, census_opts);

  Options compare_opts;
  auto* compare = app.add_subcommand("compare", "Directed against undirected balance");
  add_input_options(compare, compare_opts);
  add_report_options(compare, compare_opts);
  compare->add_option("--out", compare_opts.out, "Also write compare.json/compare.csv here");

  RandomOptions gen_opts;
  auto* gen = app.add_subcommand("gen-random", "Write a random signed digraph as TSV");
  add_random_options(gen, gen_opts);
  gen->add_option("--out", gen_opts.output, "Output file (default: stdout)");

  Options oracle_opts;
  RandomOptions oracle_random;
  auto* oracle = app.add_subcommand("oracle-check", "Compare fast paths with brute force");
  oracle->group("");
  add_input_options(oracle, oracle_opts);
  add_random_options(oracle, oracle_random);
  oracle->add_option("--count", oracle_random.count, "Random graphs to check");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*analyze) return run_analyze(analyze_opts);
    if (*census) return run_census(census_opts);
    if (*compare) return run_compare(compare_opts);
    if (*gen) return run_gen_random(gen_opts);
    if (*oracle) return run_oracle_check(oracle_opts, oracle_random);
  } catch (const Failure& f) {
    std::cerr << "signbal: " << f.message << "\n";
    return f.code;
  }
  return kExitFailure;
}
