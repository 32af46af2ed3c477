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

#pragma once

#include <array>
#include <utility>
#include <vector>

#include "signbal/balance.hpp"
#include "signbal/graph.hpp"
#include "signbal/signstats.hpp"

namespace signbal {

/// Directed (partial and non-partial) against undirected balance on the same
/// graph, plus the structural differences between the two realizations.
struct RealizationComparison {
  BalanceReport directed;  // `undirected` is filled as well
  CompositionTable directed_composition;
  CompositionTable undirected_composition;
  /// Pairs with reciprocal arcs of opposite sign, removed by the projection.
  std::vector<std::pair<NodeIndex, NodeIndex>> canceled_pairs;
  /// Triangles of the projection that are not transitive triads.
  std::vector<std::array<NodeIndex, 3>> undirected_only;
  /// Transitive triads that are not triangles of the projection.
  std::vector<std::array<NodeIndex, 3>> directed_only;

  /// Same node sets and same composition proportions in both realizations.
  bool identical_composition() const;
};

RealizationComparison compare_realizations(
    const SignedDigraph& graph, unsigned threads = default_thread_count());

}  // namespace signbal
