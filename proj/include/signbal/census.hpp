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

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "signbal/graph.hpp"
#include "signbal/parallel.hpp"
#include "signbal/types.hpp"

namespace signbal {

/// Ordered transitive triple: arcs source->mid, mid->sink and source->sink.
/// `signs` follows that arc order.
struct Triple {
  NodeIndex source = 0;
  NodeIndex mid = 0;
  NodeIndex sink = 0;
  std::array<Sign, 3> signs{Sign::Positive, Sign::Positive, Sign::Positive};

  constexpr int negative_count() const noexcept {
    return (signs[0] == Sign::Negative) + (signs[1] == Sign::Negative) +
           (signs[2] == Sign::Negative);
  }

  friend bool operator==(const Triple&, const Triple&) = default;
};

/// Three distinct nodes (ascending) with their census class and, for the
/// four transitive classes, their transitive triples.
class Triad {
 public:
  Triad() = default;
  Triad(std::array<NodeIndex, 3> nodes, TriadType type,
        std::span<const Triple> triples);

  const std::array<NodeIndex, 3>& nodes() const noexcept { return nodes_; }
  TriadType type() const noexcept { return type_; }
  std::span<const Triple> triples() const noexcept {
    return {triples_.data(), triple_count_};
  }

  friend bool operator==(const Triad& a, const Triad& b) {
    return a.nodes_ == b.nodes_ && a.type_ == b.type_ &&
           std::equal(a.triples().begin(), a.triples().end(),
                      b.triples().begin(), b.triples().end());
  }

 private:
  std::array<NodeIndex, 3> nodes_{};
  TriadType type_ = TriadType::T003;
  std::array<Triple, 6> triples_{};
  std::size_t triple_count_ = 0;
};

/// Census class of {a, b, c}; signs are ignored. Throws ContractError when
/// the nodes are not distinct and LookupError for unknown nodes.
TriadType classify_man(const SignedDigraph& graph, NodeIndex a, NodeIndex b,
                       NodeIndex c);
TriadType classify_man(const SignedDigraph& graph, std::string_view a,
                       std::string_view b, std::string_view c);

/// Every ordering (source, mid, sink) of the triad's nodes whose three arcs
/// exist, with signs attached. ContractError for non-transitive types.
std::vector<Triple> transitive_triples(const SignedDigraph& graph,
                                       const Triad& triad);

/// Classifies {a, b, c} and attaches triples when the class is transitive.
Triad make_triad(const SignedDigraph& graph, NodeIndex a, NodeIndex b,
                 NodeIndex c);

struct CensusTable {
  std::array<std::uint64_t, kTriadTypeCount> counts{};
  /// False when the three disconnected classes (003, 012, 102) are left at 0.
  bool includes_null = true;

  std::uint64_t operator[](TriadType t) const { return counts[index_of(t)]; }
  std::uint64_t total() const;

  friend bool operator==(const CensusTable&, const CensusTable&) = default;
};

enum class CensusMode { WithNull, ConnectedOnly };

/// Holland-Leinhardt census. Connected classes are enumerated; 012/102 are
/// counted per connected dyad and 003 by complement from C(n,3).
CensusTable census(const SignedDigraph& graph,
                   CensusMode mode = CensusMode::WithNull,
                   unsigned threads = default_thread_count());

std::uint64_t choose3(std::uint64_t n) noexcept;

namespace detail {

TriadType triad_type_from_code(unsigned code) noexcept;

/// Borrowed view of a triad during enumeration: nodes a < b < c and the
/// dyad entries a-b and a-c (seen from a) and b-c (seen from b); a null
/// pointer means the pair is unconnected.
struct TriadView {
  NodeIndex a, b, c;
  const Dyad* ab;
  const Dyad* ac;
  const Dyad* bc;

  /// Bits: a->b 1, b->a 2, a->c 4, c->a 8, b->c 16, c->b 32.
  unsigned code() const noexcept {
    unsigned k = 0;
    if (ab) k |= (ab->out ? 1u : 0u) | (ab->in ? 2u : 0u);
    if (ac) k |= (ac->out ? 4u : 0u) | (ac->in ? 8u : 0u);
    if (bc) k |= (bc->out ? 16u : 0u) | (bc->in ? 32u : 0u);
    return k;
  }
  TriadType type() const noexcept { return triad_type_from_code(code()); }
  Triad materialize() const;
};

const Dyad* find_dyad(const SignedDigraph& graph, NodeIndex u, NodeIndex v);

/// Per-worker buffers sized to the node count.
struct PivotScratch {
  explicit PivotScratch(std::size_t n) : position(n, 0) {}
  std::vector<std::uint32_t> position;  // 1 + slot in dyads(pivot), 0 = none
  std::vector<std::pair<NodeIndex, NodeIndex>> pairs;
};

/// Connected triads whose smallest node is `a`, in lexicographic order.
template <class Visitor>
void visit_connected_triads(const SignedDigraph& graph, NodeIndex a,
                            PivotScratch& scratch, Visitor&& visit) {
  const auto around = graph.dyads(a);
  const auto first_up = std::upper_bound(
      around.begin(), around.end(), a,
      [](NodeIndex key, const Dyad& d) { return key < d.other; });
  const auto up = around.subspan(static_cast<std::size_t>(first_up - around.begin()));
  if (up.empty()) return;
  const std::size_t offset = around.size() - up.size();
  for (std::size_t i = 0; i < up.size(); ++i) {
    scratch.position[up[i].other] = static_cast<std::uint32_t>(offset + i + 1);
  }
  auto& pairs = scratch.pairs;
  pairs.clear();
  for (std::size_t i = 0; i < up.size(); ++i) {
    const NodeIndex b = up[i].other;
    for (std::size_t j = i + 1; j < up.size(); ++j) pairs.emplace_back(b, up[j].other);
    for (const Dyad& d : graph.dyads(b)) {
      const NodeIndex c = d.other;
      if (c <= a || scratch.position[c] != 0) continue;
      pairs.emplace_back(std::min(b, c), std::max(b, c));
    }
  }
  std::sort(pairs.begin(), pairs.end());
  for (const auto& [b, c] : pairs) {
    const std::uint32_t pb = scratch.position[b];
    const std::uint32_t pc = scratch.position[c];
    TriadView view{a,
                   b,
                   c,
                   pb ? &around[pb - 1] : nullptr,
                   pc ? &around[pc - 1] : nullptr,
                   find_dyad(graph, b, c)};
    visit(view);
  }
  for (const Dyad& d : up) scratch.position[d.other] = 0;
}

/// Closed triads (skeleton triangles) whose smallest node is `a`, in
/// lexicographic order.
template <class Visitor>
void visit_closed_triads(const SignedDigraph& graph, NodeIndex a,
                         PivotScratch& scratch, Visitor&& visit) {
  const auto around = graph.dyads(a);
  std::size_t first = around.size();
  for (std::size_t i = 0; i < around.size(); ++i) {
    if (around[i].other > a) {
      first = i;
      break;
    }
  }
  if (around.size() - first < 2) return;
  for (std::size_t i = first; i < around.size(); ++i) {
    scratch.position[around[i].other] = static_cast<std::uint32_t>(i + 1);
  }
  for (std::size_t i = first; i < around.size(); ++i) {
    const NodeIndex b = around[i].other;
    for (const Dyad& bc : graph.dyads(b)) {
      if (bc.other <= b) continue;
      const std::uint32_t pc = scratch.position[bc.other];
      if (pc == 0) continue;
      visit(TriadView{a, b, bc.other, &around[i], &around[pc - 1], &bc});
    }
  }
  for (std::size_t i = first; i < around.size(); ++i) {
    scratch.position[around[i].other] = 0;
  }
}

}  // namespace detail

/// Streams every triad with at least two connected dyads exactly once, in
/// lexicographic order of node indices.
template <class Visitor>
void for_each_triad(const SignedDigraph& graph, Visitor&& visit) {
  detail::PivotScratch scratch(graph.node_count());
  for (NodeIndex a = 0; a < graph.node_count(); ++a) {
    detail::visit_connected_triads(graph, a, scratch,
                                   [&](const detail::TriadView& v) {
                                     visit(v.materialize());
                                   });
  }
}

/// Streams the triads of type 030T, 120D, 120U and 300 in lexicographic order.
template <class Visitor>
void for_each_transitive_triad(const SignedDigraph& graph, Visitor&& visit) {
  detail::PivotScratch scratch(graph.node_count());
  for (NodeIndex a = 0; a < graph.node_count(); ++a) {
    detail::visit_closed_triads(graph, a, scratch,
                                [&](const detail::TriadView& v) {
                                  if (is_transitive(v.type())) visit(v.materialize());
                                });
  }
}

/// Partitioned reduction over transitive triads: pivots are distributed over
/// `threads` workers, each folding triads into its own State.
template <class State, class MakeState, class Fold, class Merge>
State reduce_transitive_triads(const SignedDigraph& graph, unsigned threads,
                               MakeState make_state, Fold fold, Merge merge) {
  struct Worker {
    State state;
    detail::PivotScratch scratch;
  };
  const std::size_t n = graph.node_count();
  Worker merged = parallel_reduce<Worker>(
      n, threads, [&] { return Worker{make_state(), detail::PivotScratch(n)}; },
      [&](Worker& w, std::size_t a) {
        detail::visit_closed_triads(
            graph, static_cast<NodeIndex>(a), w.scratch,
            [&](const detail::TriadView& v) {
              if (is_transitive(v.type())) fold(w.state, v.materialize());
            });
      },
      [&](Worker& into, Worker& from) { merge(into.state, from.state); });
  return std::move(merged.state);
}

/// Every connected triad, materialised, in lexicographic order.
std::vector<Triad> enumerate_triads(const SignedDigraph& graph);

/// Counts per census class of connected triads, computed in parallel by
/// pivot partition.
std::array<std::uint64_t, kTriadTypeCount> count_connected_triads(
    const SignedDigraph& graph, unsigned threads);

}  // namespace signbal
