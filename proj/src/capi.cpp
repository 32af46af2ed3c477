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

#include "signbal/signbal.h"

#include <atomic>
#include <cmath>
#include <cstdlib>
#include <cstring>
#include <limits>
#include <new>
#include <sstream>
#include <string>

#include "signbal/balance.hpp"
#include "signbal/census.hpp"
#include "signbal/checksum.hpp"
#include "signbal/compare.hpp"
#include "signbal/errors.hpp"
#include "signbal/graph.hpp"
#include "signbal/io.hpp"
#include "signbal/oracle.hpp"
#include "signbal/report.hpp"
#include "signbal/signstats.hpp"

struct sb_graph {
  signbal::SignedDigraph graph;
};

namespace {

thread_local std::string g_last_error;
std::atomic<unsigned> g_threads{0};

unsigned threads() {
  const unsigned t = g_threads.load();
  return t == 0 ? signbal::default_thread_count() : t;
}

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

double or_nan(const std::optional<double>& v) { return v ? *v : kNaN; }

sb_status fail(sb_status status, std::string message) {
  g_last_error = std::move(message);
  return status;
}

template <class F>
sb_status guarded(F&& body) {
  try {
    body();
    g_last_error.clear();
    return SB_OK;
  } catch (const signbal::ParseError& e) {
    return fail(SB_ERR_PARSE, e.what());
  } catch (const signbal::IoError& e) {
    return fail(SB_ERR_IO, e.what());
  } catch (const signbal::FormatError& e) {
    return fail(SB_ERR_FORMAT, e.what());
  } catch (const signbal::LookupError& e) {
    return fail(SB_ERR_LOOKUP, e.what());
  } catch (const signbal::ContractError& e) {
    return fail(SB_ERR_CONTRACT, e.what());
  } catch (const signbal::UndefinedResultError& e) {
    return fail(SB_ERR_UNDEFINED, e.what());
  } catch (const signbal::LimitError& e) {
    return fail(SB_ERR_LIMIT, e.what());
  } catch (const std::bad_alloc&) {
    return fail(SB_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(SB_ERR_INTERNAL, e.what());
  }
}

char* duplicate(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

signbal::PreprocessConfig convert(const sb_preprocess_config* c) {
  signbal::PreprocessConfig cfg;
  if (!c) return cfg;
  cfg.sign_threshold = c->sign_threshold;
  switch (c->aggregate) {
    case SB_AGGREGATE_SUM: cfg.aggregate = signbal::AggregateRule::SumThenSign; break;
    case SB_AGGREGATE_LAST: cfg.aggregate = signbal::AggregateRule::LastRecord; break;
    case SB_AGGREGATE_MEAN: cfg.aggregate = signbal::AggregateRule::MeanThenSign; break;
    default: throw signbal::ContractError("unknown aggregate rule");
  }
  cfg.prune_pendants = c->prune_pendants != 0;
  switch (c->keep_component) {
    case SB_COMPONENT_GIANT: cfg.keep_component = signbal::ComponentPolicy::Giant; break;
    case SB_COMPONENT_ALL: cfg.keep_component = signbal::ComponentPolicy::All; break;
    default: throw signbal::ContractError("unknown component policy");
  }
  cfg.validate();
  return cfg;
}

signbal::InputFormat convert(sb_format f) {
  switch (f) {
    case SB_FORMAT_CSV_RATING: return signbal::InputFormat::CsvRating;
    case SB_FORMAT_TSV_SIGN: return signbal::InputFormat::TsvSign;
    case SB_FORMAT_SIGNED_MATRIX: return signbal::InputFormat::SignedMatrix;
  }
  throw signbal::ContractError("unknown input format");
}

signbal::BalanceMode convert(sb_balance_mode m) {
  return m == SB_BALANCE_TRIAD_MEAN ? signbal::BalanceMode::TriadMean
                                    : signbal::BalanceMode::TypeMean;
}

sb_graph* wrap(signbal::SignedDigraph g) { return new sb_graph{std::move(g)}; }

}  // namespace

extern "C" {

const char* sb_version(void) { return SIGNBAL_VERSION; }

const char* sb_status_string(sb_status status) {
  switch (status) {
    case SB_OK: return "ok";
    case SB_ERR_INVALID_ARGUMENT: return "invalid argument";
    case SB_ERR_IO: return "i/o error";
    case SB_ERR_PARSE: return "parse error";
    case SB_ERR_FORMAT: return "format error";
    case SB_ERR_LOOKUP: return "lookup error";
    case SB_ERR_CONTRACT: return "contract violation";
    case SB_ERR_UNDEFINED: return "undefined result";
    case SB_ERR_LIMIT: return "limit exceeded";
    case SB_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* sb_last_error(void) { return g_last_error.c_str(); }

void sb_string_free(char* s) { std::free(s); }

void sb_set_threads(unsigned n) { g_threads.store(n); }

sb_preprocess_config sb_preprocess_config_default(void) {
  return sb_preprocess_config{0.0, SB_AGGREGATE_SUM, 1, SB_COMPONENT_GIANT};
}

sb_status sb_graph_load_file(const char* path, sb_format format,
                             const sb_preprocess_config* config, sb_graph** out) {
  if (!path || !out) return fail(SB_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    const auto cfg = convert(config);
    const auto records = signbal::load_edge_records(std::filesystem::path(path), convert(format));
    *out = wrap(signbal::build_graph(records, cfg));
  });
}

sb_status sb_graph_load_buffer(const char* data, size_t size, sb_format format,
                               const sb_preprocess_config* config, sb_graph** out) {
  if ((!data && size > 0) || !out) return fail(SB_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    const auto cfg = convert(config);
    std::istringstream in(std::string(data ? data : "", size));
    const auto records = signbal::load_edge_records(in, convert(format));
    *out = wrap(signbal::build_graph(records, cfg));
  });
}

sb_status sb_graph_preprocess(const sb_graph* graph, const sb_preprocess_config* config,
                              sb_graph** out) {
  if (!graph || !out) return fail(SB_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] { *out = wrap(signbal::preprocess(graph->graph, convert(config))); });
}

sb_status sb_graph_random(size_t nodes, double edge_prob, double neg_prob, uint64_t seed,
                          sb_graph** out) {
  if (!out) return fail(SB_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    *out = wrap(signbal::oracle::random_signed_digraph(nodes, edge_prob, neg_prob, seed));
  });
}

void sb_graph_free(sb_graph* graph) { delete graph; }

size_t sb_graph_node_count(const sb_graph* graph) {
  return graph ? graph->graph.node_count() : 0;
}

size_t sb_graph_edge_count(const sb_graph* graph) {
  return graph ? graph->graph.edge_count() : 0;
}

size_t sb_graph_component_count(const sb_graph* graph) {
  return graph ? signbal::weak_components(graph->graph).size() : 0;
}

sb_status sb_graph_dump_tsv(const sb_graph* graph, char** out) {
  if (!graph || !out) return fail(SB_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] { *out = duplicate(signbal::to_tsv(graph->graph)); });
}

sb_status sb_census(const sb_graph* graph, uint64_t counts[16]) {
  if (!graph || !counts) return fail(SB_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    const auto table = signbal::census(graph->graph, signbal::CensusMode::WithNull, threads());
    for (std::size_t i = 0; i < 16; ++i) counts[i] = table.counts[i];
  });
}

const char* sb_triad_type_name(int index) {
  if (index < 0 || index >= 16) return nullptr;
  return signbal::to_string(signbal::kAllTriadTypes[static_cast<std::size_t>(index)]).data();
}

sb_status sb_balance(const sb_graph* graph, sb_balance_summary* out) {
  if (!graph || !out) return fail(SB_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    const auto r = signbal::analyze_balance(graph->graph, true, threads());
    sb_balance_summary s{};
    for (std::size_t i = 0; i < 4; ++i) {
      s.type_triads[i] = r.per_type[i].triad_count;
      s.type_ratio[i] = or_nan(r.per_type[i].ratio);
    }
    s.type_mean = or_nan(r.overall_type_mean);
    s.triad_mean = or_nan(r.overall_triad_mean);
    s.nonpartial = r.nonpartial ? r.nonpartial->ratio : kNaN;
    s.completely_balanced = r.counts.completely_balanced;
    s.partially_balanced = r.counts.partially_balanced;
    s.completely_imbalanced = r.counts.completely_imbalanced;
    s.triangles = r.undirected->triangles;
    s.balanced_triangles = r.undirected->balanced;
    s.undirected = or_nan(r.undirected->ratio);
    *out = s;
  });
}

sb_status sb_composition(const sb_graph* graph, sb_composition_counts* out) {
  if (!graph || !out) return fail(SB_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    const auto d = signbal::composition_directed(graph->graph, threads());
    const auto u = signbal::composition_undirected(signbal::project_undirected(graph->graph));
    for (std::size_t i = 0; i < 4; ++i) {
      out->directed[i] = d.counts[i];
      out->undirected[i] = u.counts[i];
    }
  });
}

sb_status sb_metrics_compute(const sb_graph* graph, sb_metrics* out) {
  if (!graph || !out) return fail(SB_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    const auto m = signbal::metrics(graph->graph, threads());
    *out = sb_metrics{m.node_count,   m.edge_count,      m.component_count,
                      m.transitivity, m.density,         m.avg_path_length,
                      m.clustering_coefficient};
  });
}

namespace {

std::string render(const signbal::SignedDigraph& g, sb_report_kind kind,
                   sb_balance_mode mode, bool json, const char* network) {
  namespace rep = signbal::report;
  const unsigned t = threads();
  const std::string label = network ? network : "";
  switch (kind) {
    case SB_REPORT_CENSUS: {
      const auto c = signbal::census(g, signbal::CensusMode::WithNull, t);
      return json ? rep::census_json(c) : rep::census_csv(c);
    }
    case SB_REPORT_BALANCE: {
      const auto r = signbal::analyze_balance(g, true, t);
      return json ? rep::balance_json(r, convert(mode)) : rep::balance_csv(r, convert(mode));
    }
    case SB_REPORT_COMPOSITION: {
      const auto d = signbal::composition_directed(g, t);
      const auto u = signbal::composition_undirected(signbal::project_undirected(g));
      return json ? rep::composition_json(d, u) : rep::composition_csv(label, d, u);
    }
    case SB_REPORT_METRICS: {
      const auto m = signbal::metrics(g, t);
      return json ? rep::metrics_json(m) : rep::metrics_csv(m);
    }
    case SB_REPORT_COMPARE: {
      const auto c = signbal::compare_realizations(g, t);
      return json ? rep::compare_json(c, g, convert(mode))
                  : rep::compare_csv(label, c, convert(mode));
    }
  }
  throw signbal::ContractError("unknown report kind");
}

}  // namespace

sb_status sb_report_json(const sb_graph* graph, sb_report_kind kind, sb_balance_mode mode,
                         char** out) {
  if (!graph || !out) return fail(SB_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] { *out = duplicate(render(graph->graph, kind, mode, true, nullptr)); });
}

sb_status sb_report_csv(const sb_graph* graph, sb_report_kind kind, sb_balance_mode mode,
                        const char* network, char** out) {
  if (!graph || !out) return fail(SB_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] { *out = duplicate(render(graph->graph, kind, mode, false, network)); });
}

sb_status sb_oracle_check(const sb_graph* graph, size_t* mismatches, char** details) {
  if (!graph || !mismatches) return fail(SB_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    const auto list = signbal::oracle::compare_with_fast_path(graph->graph, threads());
    if (details) {
      std::string joined;
      for (const auto& line : list) joined += line + "\n";
      *details = duplicate(joined);
    }
    *mismatches = list.size();
  });
}

sb_status sb_sha256_file(const char* path, char** hex) {
  if (!path || !hex) return fail(SB_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] { *hex = duplicate(signbal::sha256_file(path)); });
}

}  // extern "C"
