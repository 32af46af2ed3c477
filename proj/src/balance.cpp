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

#include "signbal/balance.hpp"

#include <string>

#include "signbal/errors.hpp"

namespace signbal {

std::string_view to_string(TriadClass c) noexcept {
  switch (c) {
    case TriadClass::CompletelyBalanced: return "completely-balanced";
    case TriadClass::PartiallyBalanced: return "partially-balanced";
    case TriadClass::CompletelyImbalanced: return "completely-imbalanced";
  }
  return "unknown";
}

std::string_view to_string(BalanceMode m) noexcept {
  return m == BalanceMode::TypeMean ? "type-mean" : "triad-mean";
}

std::optional<BalanceMode> parse_balance_mode(std::string_view name) noexcept {
  if (name == "type-mean") return BalanceMode::TypeMean;
  if (name == "triad-mean") return BalanceMode::TriadMean;
  return std::nullopt;
}

namespace {

TriadClass classify(std::size_t balanced, std::size_t total) noexcept {
  if (balanced == total) return TriadClass::CompletelyBalanced;
  if (balanced == 0) return TriadClass::CompletelyImbalanced;
  return TriadClass::PartiallyBalanced;
}

}  // namespace

TriadBalance triad_balance(const SignedDigraph& graph, const Triad& triad) {
  const auto triples = transitive_triples(graph, triad);
  TriadBalance out;
  out.triad = triad;
  out.total_triples = triples.size();
  for (const auto& t : triples) out.balanced_triples += triple_is_balanced(t);
  out.ratio = static_cast<double>(out.balanced_triples) /
              static_cast<double>(out.total_triples);
  out.classification = classify(out.balanced_triples, out.total_triples);
  return out;
}

void BalanceTally::add(const Triad& triad) {
  const auto slot = transitive_slot(triad.type());
  if (!slot) {
    throw ContractError("triad of type " + std::string(to_string(triad.type())) +
                        " is not transitive");
  }
  std::uint64_t balanced = 0;
  for (const auto& t : triad.triples()) {
    balanced += triple_is_balanced(t);
    ++by_negatives[static_cast<std::size_t>(t.negative_count())];
  }
  const std::uint64_t total = triad.triples().size();
  auto& bucket = per_type[*slot];
  ++bucket.triads;
  bucket.balanced_triples += balanced;
  bucket.total_triples += total;
  ratio_sixths += balanced * (6 / total);
  switch (classify(balanced, total)) {
    case TriadClass::CompletelyBalanced: ++classes.completely_balanced; break;
    case TriadClass::PartiallyBalanced: ++classes.partially_balanced; break;
    case TriadClass::CompletelyImbalanced: ++classes.completely_imbalanced; break;
  }
}

void BalanceTally::merge(const BalanceTally& other) {
  for (std::size_t i = 0; i < per_type.size(); ++i) {
    per_type[i].triads += other.per_type[i].triads;
    per_type[i].balanced_triples += other.per_type[i].balanced_triples;
    per_type[i].total_triples += other.per_type[i].total_triples;
  }
  ratio_sixths += other.ratio_sixths;
  classes.completely_balanced += other.classes.completely_balanced;
  classes.partially_balanced += other.classes.partially_balanced;
  classes.completely_imbalanced += other.classes.completely_imbalanced;
  for (std::size_t i = 0; i < by_negatives.size(); ++i) {
    by_negatives[i] += other.by_negatives[i];
  }
}

BalanceTally tally_transitive_triads(const SignedDigraph& graph, unsigned threads) {
  return reduce_transitive_triads<BalanceTally>(
      graph, threads, [] { return BalanceTally{}; },
      [](BalanceTally& acc, const Triad& t) { acc.add(t); },
      [](BalanceTally& into, const BalanceTally& from) { into.merge(from); });
}

double type_mean(std::span<const TypeBalance> types) {
  double sum = 0.0;
  std::size_t present = 0;
  for (const auto& t : types) {
    if (t.triad_count > 0 && t.ratio) {
      sum += *t.ratio;
      ++present;
    }
  }
  if (present == 0) {
    throw UndefinedResultError("no transitive triads: balance is undefined");
  }
  return sum / static_cast<double>(present);
}

BalanceReport make_balance_report(const BalanceTally& tally) {
  BalanceReport report;
  for (std::size_t i = 0; i < kTransitiveTypes.size(); ++i) {
    const auto& bucket = tally.per_type[i];
    TypeBalance& tb = report.per_type[i];
    tb.type = kTransitiveTypes[i];
    tb.triad_count = bucket.triads;
    tb.balanced_triples = bucket.balanced_triples;
    tb.total_triples = bucket.total_triples;
    if (bucket.total_triples > 0) {
      tb.ratio = static_cast<double>(bucket.balanced_triples) /
                 static_cast<double>(bucket.total_triples);
    }
  }
  report.counts = tally.classes;
  const std::uint64_t triads = tally.triads();
  if (triads > 0) {
    report.overall_type_mean = type_mean(report.per_type);
    report.overall_triad_mean = static_cast<double>(tally.ratio_sixths) /
                                (6.0 * static_cast<double>(triads));
    NonPartialBalance np;
    np.balanced = tally.classes.completely_balanced;
    np.imbalanced = triads - np.balanced;
    np.ratio = static_cast<double>(np.balanced) / static_cast<double>(triads);
    report.nonpartial = np;
  }
  return report;
}

double BalanceReport::overall(BalanceMode mode) const {
  const auto& value =
      mode == BalanceMode::TypeMean ? overall_type_mean : overall_triad_mean;
  if (!value) {
    throw UndefinedResultError("no transitive triads: balance is undefined");
  }
  return *value;
}

TypeBalances type_balance(const SignedDigraph& graph, unsigned threads) {
  return make_balance_report(tally_transitive_triads(graph, threads)).per_type;
}

double overall_balance(const SignedDigraph& graph, BalanceMode mode,
                       unsigned threads) {
  return make_balance_report(tally_transitive_triads(graph, threads)).overall(mode);
}

NonPartialBalance nonpartial_balance(const SignedDigraph& graph, unsigned threads) {
  const auto report = make_balance_report(tally_transitive_triads(graph, threads));
  if (!report.nonpartial) {
    throw UndefinedResultError("no transitive triads: balance is undefined");
  }
  return *report.nonpartial;
}

UndirectedBalance undirected_balance(const SignedGraph& graph) {
  UndirectedBalance out;
  std::vector<std::uint32_t> position(graph.node_count(), 0);
  for (NodeIndex a = 0; a < graph.node_count(); ++a) {
    const auto around = graph.neighbors(a);
    for (std::size_t i = 0; i < around.size(); ++i) {
      position[around[i].node] = static_cast<std::uint32_t>(i + 1);
    }
    for (const auto& ab : around) {
      if (ab.node <= a) continue;
      for (const auto& bc : graph.neighbors(ab.node)) {
        if (bc.node <= ab.node || position[bc.node] == 0) continue;
        const auto& ac = around[position[bc.node] - 1];
        const int product = to_int(ab.sign) * to_int(bc.sign) * to_int(ac.sign);
        ++out.triangles;
        (product > 0 ? out.balanced : out.imbalanced) += 1;
      }
    }
    for (const auto& nb : around) position[nb.node] = 0;
  }
  if (out.triangles > 0) {
    out.ratio = static_cast<double>(out.balanced) / static_cast<double>(out.triangles);
  }
  return out;
}

BalanceReport analyze_balance(const SignedDigraph& graph, bool with_undirected,
                              unsigned threads) {
  BalanceReport report = make_balance_report(tally_transitive_triads(graph, threads));
  if (with_undirected) report.undirected = undirected_balance(project_undirected(graph));
  return report;
}

}  // namespace signbal
