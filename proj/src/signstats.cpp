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

#include "signbal/signstats.hpp"

#include <vector>

#include "signbal/errors.hpp"

namespace signbal {

std::string_view to_string(Composition c) noexcept {
  switch (c) {
    case Composition::PPP: return "+++";
    case Composition::PNN: return "+--";
    case Composition::PPN: return "++-";
    case Composition::NNN: return "---";
  }
  return "?";
}

std::string_view key_of(Composition c) noexcept {
  switch (c) {
    case Composition::PPP: return "ppp";
    case Composition::PNN: return "pnn";
    case Composition::PPN: return "ppn";
    case Composition::NNN: return "nnn";
  }
  return "?";
}

std::string_view to_string(CompositionBasis b) noexcept {
  return b == CompositionBasis::DirectedTriples ? "directed-triples"
                                                : "undirected-triangles";
}

double CompositionTable::proportion(Composition c) const noexcept {
  const std::uint64_t n = total();
  if (n == 0) return 0.0;
  return static_cast<double>(count(c)) / static_cast<double>(n);
}

CompositionTable composition_from_tally(const BalanceTally& tally) {
  CompositionTable table;
  table.basis = CompositionBasis::DirectedTriples;
  for (int neg = 0; neg < 4; ++neg) {
    table.counts[static_cast<std::size_t>(composition_from_negatives(neg))] +=
        tally.by_negatives[static_cast<std::size_t>(neg)];
  }
  return table;
}

CompositionTable composition_directed(const SignedDigraph& graph, unsigned threads) {
  return composition_from_tally(tally_transitive_triads(graph, threads));
}

CompositionTable composition_undirected(const SignedGraph& graph) {
  CompositionTable table;
  table.basis = CompositionBasis::UndirectedTriangles;
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
        const int negatives = (ab.sign == Sign::Negative) +
                              (bc.sign == Sign::Negative) +
                              (ac.sign == Sign::Negative);
        ++table.counts[static_cast<std::size_t>(composition_from_negatives(negatives))];
      }
    }
    for (const auto& nb : around) position[nb.node] = 0;
  }
  return table;
}

namespace {

struct SkeletonTally {
  std::uint64_t closed = 0;     // triangles counted once per corner
  std::uint64_t connected = 0;  // paths of length two
  std::uint64_t path_sum = 0;
  std::uint64_t reachable = 0;
  std::vector<std::uint32_t> mark;
  std::vector<std::int32_t> dist;
  std::vector<NodeIndex> frontier;
};

}  // namespace

GraphMetrics metrics(const SignedDigraph& graph, unsigned threads) {
  const std::size_t n = graph.node_count();
  if (n < 2) {
    throw UndefinedResultError("metrics need at least two nodes");
  }
  GraphMetrics out;
  out.node_count = n;
  out.edge_count = graph.edge_count();
  out.component_count = weak_components(graph).size();
  out.density = static_cast<double>(graph.edge_count()) /
                (static_cast<double>(n) * static_cast<double>(n - 1));

  // Per-node values are summed afterwards in index order so the result does
  // not depend on the worker count.
  std::vector<double> local(n, 0.0);
  SkeletonTally total = parallel_reduce<SkeletonTally>(
      n, threads,
      [&] {
        SkeletonTally t;
        t.mark.assign(n, 0);
        t.dist.assign(n, -1);
        return t;
      },
      [&](SkeletonTally& t, std::size_t vi) {
        const auto v = static_cast<NodeIndex>(vi);
        const auto around = graph.dyads(v);
        const std::uint64_t deg = around.size();

        // Local clustering: skeleton links among v's neighbours.
        for (const Dyad& d : around) t.mark[d.other] = 1;
        std::uint64_t links = 0;
        for (const Dyad& d : around) {
          for (const Dyad& e : graph.dyads(d.other)) links += t.mark[e.other];
        }
        for (const Dyad& d : around) t.mark[d.other] = 0;
        links /= 2;
        const std::uint64_t pairs = deg * (deg - (deg > 0 ? 1 : 0)) / 2;
        t.closed += links;
        t.connected += pairs;
        if (pairs > 0) {
          local[v] = static_cast<double>(links) / static_cast<double>(pairs);
        }

        // Breadth-first distances from v.
        auto& frontier = t.frontier;
        frontier.clear();
        frontier.push_back(v);
        t.dist[v] = 0;
        for (std::size_t head = 0; head < frontier.size(); ++head) {
          const NodeIndex u = frontier[head];
          for (const Dyad& d : graph.dyads(u)) {
            if (t.dist[d.other] >= 0) continue;
            t.dist[d.other] = t.dist[u] + 1;
            t.path_sum += static_cast<std::uint64_t>(t.dist[d.other]);
            ++t.reachable;
            frontier.push_back(d.other);
          }
        }
        for (NodeIndex u : frontier) t.dist[u] = -1;
      },
      [](SkeletonTally& into, const SkeletonTally& from) {
        into.closed += from.closed;
        into.connected += from.connected;
        into.path_sum += from.path_sum;
        into.reachable += from.reachable;
      });

  // Each triangle closes three connected triples; `closed` counts it once
  // per corner, which is already the 3x numerator.
  out.transitivity = total.connected == 0
                         ? 0.0
                         : static_cast<double>(total.closed) /
                               static_cast<double>(total.connected);
  double local_sum = 0.0;
  for (double c : local) local_sum += c;
  out.clustering_coefficient = local_sum / static_cast<double>(n);
  if (total.reachable == 0) {
    throw UndefinedResultError("no reachable node pairs: path length undefined");
  }
  out.avg_path_length =
      static_cast<double>(total.path_sum) / static_cast<double>(total.reachable);
  return out;
}

}  // namespace signbal
