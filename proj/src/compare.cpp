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

#include "signbal/compare.hpp"

#include <algorithm>
#include <iterator>

namespace signbal {

namespace {

std::vector<std::array<NodeIndex, 3>> triangles_of(const SignedGraph& graph) {
  std::vector<std::array<NodeIndex, 3>> out;
  std::vector<char> mark(graph.node_count(), 0);
  for (NodeIndex a = 0; a < graph.node_count(); ++a) {
    const auto around = graph.neighbors(a);
    for (const auto& nb : around) mark[nb.node] = 1;
    for (const auto& ab : around) {
      if (ab.node <= a) continue;
      for (const auto& bc : graph.neighbors(ab.node)) {
        if (bc.node > ab.node && mark[bc.node]) out.push_back({a, ab.node, bc.node});
      }
    }
    for (const auto& nb : around) mark[nb.node] = 0;
  }
  return out;
}

}  // namespace

bool RealizationComparison::identical_composition() const {
  if (!undirected_only.empty() || !directed_only.empty()) return false;
  const auto dt = directed_composition.total();
  const auto ut = undirected_composition.total();
  if (dt == 0 || ut == 0) return dt == ut;
  for (std::size_t i = 0; i < 4; ++i) {
    // Equal proportions, compared as exact fractions.
    if (directed_composition.counts[i] * ut != undirected_composition.counts[i] * dt) {
      return false;
    }
  }
  return true;
}

RealizationComparison compare_realizations(const SignedDigraph& graph,
                                           unsigned threads) {
  RealizationComparison out;
  const BalanceTally tally = tally_transitive_triads(graph, threads);
  out.directed = make_balance_report(tally);
  out.directed_composition = composition_from_tally(tally);

  const SignedGraph projected = project_undirected(graph);
  out.directed.undirected = undirected_balance(projected);
  out.undirected_composition = composition_undirected(projected);
  out.canceled_pairs = sign_mismatch_pairs(graph);

  std::vector<std::array<NodeIndex, 3>> transitive;
  for_each_transitive_triad(graph, [&](const Triad& t) { transitive.push_back(t.nodes()); });
  const auto triangles = triangles_of(projected);
  // Both lists are produced in lexicographic order.
  std::set_difference(triangles.begin(), triangles.end(), transitive.begin(),
                      transitive.end(), std::back_inserter(out.undirected_only));
  std::set_difference(transitive.begin(), transitive.end(), triangles.begin(),
                      triangles.end(), std::back_inserter(out.directed_only));
  return out;
}

}  // namespace signbal
