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

#include "signbal/report.hpp"

#include <cstdio>
#include <optional>
#include <sstream>

#include "json.hpp"

namespace signbal::report {

using nlohmann::ordered_json;

namespace {

ordered_json nullable(const std::optional<double>& v) {
  return v ? ordered_json(*v) : ordered_json(nullptr);
}

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

std::string csv_ratio(const std::optional<double>& v) {
  return v ? two_decimals(*v) : std::string();
}

ordered_json undirected_json(const std::optional<UndirectedBalance>& u) {
  if (!u) return nullptr;
  return {{"triangles", u->triangles},
          {"balanced", u->balanced},
          {"imbalanced", u->imbalanced},
          {"ratio", nullable(u->ratio)}};
}

ordered_json balance_object(const BalanceReport& r, BalanceMode mode) {
  ordered_json j;
  const auto& overall =
      mode == BalanceMode::TypeMean ? r.overall_type_mean : r.overall_triad_mean;
  j["balance_mode"] = to_string(mode);
  j["overall"] = nullable(overall);
  j["transitive_triads"] = r.transitive_triads();
  ordered_json per_type = ordered_json::array();
  for (const auto& t : r.per_type) {
    per_type.push_back({{"type", to_string(t.type)},
                        {"count", t.triad_count},
                        {"balanced_triples", t.balanced_triples},
                        {"total_triples", t.total_triples},
                        {"ratio", nullable(t.ratio)}});
  }
  j["per_type"] = per_type;
  j["overall_type_mean"] = nullable(r.overall_type_mean);
  j["overall_triad_mean"] = nullable(r.overall_triad_mean);
  if (r.nonpartial) {
    j["nonpartial"] = {{"ratio", r.nonpartial->ratio},
                       {"balanced", r.nonpartial->balanced},
                       {"imbalanced", r.nonpartial->imbalanced}};
  } else {
    j["nonpartial"] = nullptr;
  }
  j["classification_counts"] = {{"completely_balanced", r.counts.completely_balanced},
                                {"partially_balanced", r.counts.partially_balanced},
                                {"completely_imbalanced", r.counts.completely_imbalanced}};
  j["undirected"] = undirected_json(r.undirected);
  return j;
}

ordered_json composition_object(const CompositionTable& t) {
  ordered_json counts;
  ordered_json proportions;
  for (Composition c : kCompositions) {
    counts[std::string(key_of(c))] = t.count(c);
    proportions[std::string(key_of(c))] = t.proportion(c);
  }
  return {{"basis", to_string(t.basis)},
          {"total", t.total()},
          {"counts", counts},
          {"proportions", proportions}};
}

std::string composition_row(std::string_view network, const CompositionTable& t) {
  std::string row(network);
  row += ',';
  row += to_string(t.basis);
  for (Composition c : kCompositions) {
    row += ',';
    row += two_decimals(t.proportion(c));
  }
  row += ',' + std::to_string(t.total()) + '\n';
  return row;
}

}  // namespace

std::string two_decimals(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.2f", value);
  return buf;
}

std::string census_csv(const CensusTable& table) {
  std::string out = "triad_type,count\n";
  for (TriadType t : kAllTriadTypes) {
    out += to_string(t);
    out += ',' + std::to_string(table[t]) + '\n';
  }
  return out;
}

std::string census_json(const CensusTable& table) {
  ordered_json counts;
  for (TriadType t : kAllTriadTypes) counts[std::string(to_string(t))] = table[t];
  ordered_json j;
  j["includes_null"] = table.includes_null;
  j["total"] = table.total();
  j["counts"] = counts;
  return dump(j);
}

std::string balance_csv(const BalanceReport& report, BalanceMode mode) {
  std::string out = "type,ratio,count\n";
  for (const auto& t : report.per_type) {
    out += to_string(t.type);
    out += ',' + csv_ratio(t.ratio) + ',' + std::to_string(t.triad_count) + '\n';
  }
  const auto& overall =
      mode == BalanceMode::TypeMean ? report.overall_type_mean : report.overall_triad_mean;
  out += "average," + csv_ratio(overall) + ',' +
         std::to_string(report.transitive_triads()) + '\n';
  return out;
}

std::string balance_json(const BalanceReport& report, BalanceMode mode) {
  return dump(balance_object(report, mode));
}

std::string composition_csv(std::string_view network, const CompositionTable& directed,
                            const CompositionTable& undirected) {
  return "network,basis,ppp,pnn,ppn,nnn,total\n" + composition_row(network, directed) +
         composition_row(network, undirected);
}

std::string composition_json(const CompositionTable& directed,
                             const CompositionTable& undirected) {
  ordered_json j;
  j["directed"] = composition_object(directed);
  j["undirected"] = composition_object(undirected);
  return dump(j);
}

std::string metrics_csv(const GraphMetrics& m) {
  std::ostringstream out;
  out << "measure,value\n"
      << "nodes," << m.node_count << '\n'
      << "edges," << m.edge_count << '\n'
      << "components," << m.component_count << '\n'
      << "transitivity," << two_decimals(m.transitivity) << '\n'
      << "density," << two_decimals(m.density) << '\n'
      << "avg_path_length," << two_decimals(m.avg_path_length) << '\n'
      << "clustering_coefficient," << two_decimals(m.clustering_coefficient) << '\n';
  return out.str();
}

std::string metrics_json(const GraphMetrics& m) {
  ordered_json j;
  j["nodes"] = m.node_count;
  j["edges"] = m.edge_count;
  j["components"] = m.component_count;
  j["transitivity"] = m.transitivity;
  j["density"] = m.density;
  j["avg_path_length"] = m.avg_path_length;
  j["clustering_coefficient"] = m.clustering_coefficient;
  j["path_length_basis"] = "undirected-skeleton";
  return dump(j);
}

std::string_view verdict(const RealizationComparison& c) {
  return c.identical_composition() ? "directed = undirected" : "directed != undirected";
}

std::string compare_csv(std::string_view network, const RealizationComparison& c,
                        BalanceMode mode) {
  const BalanceReport& d = c.directed;
  const auto& partial = mode == BalanceMode::TypeMean ? d.overall_type_mean : d.overall_triad_mean;
  std::string out =
      "network,partial_br,completely_balanced,partially_balanced,completely_imbalanced,"
      "nonpartial_br,nonpartial_bt,nonpartial_it,undirected_br,undirected_bt,"
      "undirected_it\n";
  out += std::string(network) + ',' + csv_ratio(partial);
  out += ',' + std::to_string(d.counts.completely_balanced);
  out += ',' + std::to_string(d.counts.partially_balanced);
  out += ',' + std::to_string(d.counts.completely_imbalanced);
  if (d.nonpartial) {
    out += ',' + two_decimals(d.nonpartial->ratio) + ',' +
           std::to_string(d.nonpartial->balanced) + ',' +
           std::to_string(d.nonpartial->imbalanced);
  } else {
    out += ",,0,0";
  }
  const auto& u = d.undirected;
  if (u) {
    out += ',' + csv_ratio(u->ratio) + ',' + std::to_string(u->balanced) + ',' +
           std::to_string(u->imbalanced);
  } else {
    out += ",,0,0";
  }
  out += '\n';
  return out;
}

std::string compare_json(const RealizationComparison& c, const SignedDigraph& graph,
                         BalanceMode mode) {
  ordered_json j;
  j["directed"] = balance_object(c.directed, mode);
  j["undirected"] = undirected_json(c.directed.undirected);
  j["composition"] = {{"directed", composition_object(c.directed_composition)},
                      {"undirected", composition_object(c.undirected_composition)}};
  ordered_json canceled = ordered_json::array();
  for (const auto& [u, v] : c.canceled_pairs) {
    canceled.push_back({graph.label(u), graph.label(v)});
  }
  auto triples = [&](const std::vector<std::array<NodeIndex, 3>>& list) {
    ordered_json arr = ordered_json::array();
    for (const auto& t : list) {
      arr.push_back({graph.label(t[0]), graph.label(t[1]), graph.label(t[2])});
    }
    return arr;
  };
  j["canceled_pairs"] = canceled;
  j["undirected_only_triangles"] = triples(c.undirected_only);
  j["directed_only_triads"] = triples(c.directed_only);
  j["identical_composition"] = c.identical_composition();
  j["verdict"] = verdict(c);
  return dump(j);
}

}  // namespace signbal::report
