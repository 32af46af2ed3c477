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
#include <cstdint>
#include <string_view>

#include "signbal/balance.hpp"
#include "signbal/graph.hpp"
#include "signbal/parallel.hpp"

namespace signbal {

/// Sign multiset of a triple or triangle.
enum class Composition : std::uint8_t { PPP, PNN, PPN, NNN };

inline constexpr std::array<Composition, 4> kCompositions = {
    Composition::PPP, Composition::PNN, Composition::PPN, Composition::NNN};

constexpr Composition composition_from_negatives(int negatives) noexcept {
  switch (negatives) {
    case 0: return Composition::PPP;
    case 1: return Composition::PPN;
    case 2: return Composition::PNN;
    default: return Composition::NNN;
  }
}

std::string_view to_string(Composition c) noexcept;  // "+++", "+--", ...
std::string_view key_of(Composition c) noexcept;     // "ppp", "pnn", ...

enum class CompositionBasis { DirectedTriples, UndirectedTriangles };
std::string_view to_string(CompositionBasis b) noexcept;

struct CompositionTable {
  CompositionBasis basis = CompositionBasis::DirectedTriples;
  std::array<std::uint64_t, 4> counts{};  // indexed like kCompositions

  std::uint64_t total() const noexcept {
    return counts[0] + counts[1] + counts[2] + counts[3];
  }
  std::uint64_t count(Composition c) const noexcept {
    return counts[static_cast<std::size_t>(c)];
  }
  /// 0 for every entry when the table is empty.
  double proportion(Composition c) const noexcept;

  friend bool operator==(const CompositionTable&, const CompositionTable&) = default;
};

CompositionTable composition_from_tally(const BalanceTally& tally);
CompositionTable composition_directed(const SignedDigraph& graph,
                                      unsigned threads = default_thread_count());
CompositionTable composition_undirected(const SignedGraph& graph);

struct GraphMetrics {
  std::size_t node_count = 0;
  std::size_t edge_count = 0;
  std::size_t component_count = 0;
  double transitivity = 0.0;
  double density = 0.0;
  double avg_path_length = 0.0;
  double clustering_coefficient = 0.0;
};

/// Density uses ordered pairs of the digraph; transitivity, clustering and
/// path length use the unsigned undirected skeleton. UndefinedResultError
/// when fewer than two nodes or no reachable pair exists.
GraphMetrics metrics(const SignedDigraph& graph,
                     unsigned threads = default_thread_count());

}  // namespace signbal
