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

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "signbal/types.hpp"

namespace signbal {

/// One raw scored interaction, before aggregation. Node ids are opaque.
struct EdgeRecord {
  std::string source;
  std::string target;
  double weight = 0.0;
  std::optional<std::int64_t> timestamp;

  friend bool operator==(const EdgeRecord&, const EdgeRecord&) = default;
};

enum class AggregateRule { SumThenSign, LastRecord, MeanThenSign };
enum class ComponentPolicy { Giant, All };

struct PreprocessConfig {
  double sign_threshold = 0.0;
  AggregateRule aggregate = AggregateRule::SumThenSign;
  bool prune_pendants = true;
  ComponentPolicy keep_component = ComponentPolicy::Giant;

  /// Throws ContractError if the threshold is not finite.
  void validate() const;
};

/// Relationship between a node and one neighbour in the underlying
/// undirected skeleton. `out` is self -> other, `in` is other -> self.
struct Dyad {
  NodeIndex other = 0;
  bool out = false;
  bool in = false;
  Sign out_sign = Sign::Positive;
  Sign in_sign = Sign::Positive;

  bool mutual() const noexcept { return out && in; }
};

/// Immutable signed digraph: at most one signed arc per ordered pair, no
/// self-loops. Adjacency is stored once per node as a sorted list of dyads,
/// which serves both directed lookups and skeleton traversal.
class SignedDigraph {
 public:
  struct Edge {
    NodeIndex source = 0;
    NodeIndex target = 0;
    Sign sign = Sign::Positive;

    friend bool operator==(const Edge&, const Edge&) = default;
  };

  SignedDigraph() = default;

  /// Labels must be distinct; edges must reference valid indices, contain no
  /// self-loops and no duplicate ordered pairs. Violations throw
  /// ContractError.
  SignedDigraph(std::vector<std::string> labels, std::vector<Edge> edges);

  std::size_t node_count() const noexcept { return labels_.size(); }
  std::size_t edge_count() const noexcept { return edge_count_; }

  const std::string& label(NodeIndex v) const;
  std::span<const std::string> labels() const noexcept { return labels_; }

  std::optional<NodeIndex> find(std::string_view label) const;
  /// Like find() but throws LookupError for unknown ids.
  NodeIndex index_of(std::string_view label) const;

  std::span<const Dyad> dyads(NodeIndex v) const;
  std::optional<Dyad> dyad(NodeIndex u, NodeIndex v) const;
  std::optional<Sign> edge_sign(NodeIndex source, NodeIndex target) const;
  bool has_edge(NodeIndex source, NodeIndex target) const {
    return edge_sign(source, target).has_value();
  }

  std::size_t out_degree(NodeIndex v) const { return out_degree_.at(v); }
  std::size_t in_degree(NodeIndex v) const { return in_degree_.at(v); }
  /// In plus out degree; a mutual dyad counts twice.
  std::size_t total_degree(NodeIndex v) const {
    return out_degree(v) + in_degree(v);
  }
  /// Number of distinct neighbours in the skeleton.
  std::size_t skeleton_degree(NodeIndex v) const { return dyads(v).size(); }

  /// All arcs ordered by (source, target).
  std::vector<Edge> edges() const;

  /// Subgraph induced by `keep` (ascending, unique). Relative label order is
  /// preserved.
  SignedDigraph induced(std::span<const NodeIndex> keep) const;

  friend bool operator==(const SignedDigraph& a, const SignedDigraph& b);

 private:
  std::vector<std::string> labels_;
  std::unordered_map<std::string, NodeIndex> index_;
  std::vector<std::size_t> offsets_{0};
  std::vector<Dyad> dyads_;
  std::vector<std::uint32_t> out_degree_;
  std::vector<std::uint32_t> in_degree_;
  std::size_t edge_count_ = 0;
};

struct SignedNeighbor {
  NodeIndex node = 0;
  Sign sign = Sign::Positive;
};

/// Immutable undirected signed graph; at most one edge per unordered pair.
class SignedGraph {
 public:
  struct Edge {
    NodeIndex u = 0;  // u < v
    NodeIndex v = 0;
    Sign sign = Sign::Positive;

    friend bool operator==(const Edge&, const Edge&) = default;
  };

  SignedGraph() = default;
  SignedGraph(std::vector<std::string> labels, std::vector<Edge> edges);

  std::size_t node_count() const noexcept { return labels_.size(); }
  std::size_t edge_count() const noexcept { return neighbors_.size() / 2; }
  const std::string& label(NodeIndex v) const;
  std::span<const std::string> labels() const noexcept { return labels_; }

  std::span<const SignedNeighbor> neighbors(NodeIndex v) const;
  std::optional<Sign> edge_sign(NodeIndex u, NodeIndex v) const;
  /// Edges ordered by (u, v) with u < v.
  std::vector<Edge> edges() const;

 private:
  std::vector<std::string> labels_;
  std::vector<std::size_t> offsets_{0};
  std::vector<SignedNeighbor> neighbors_;
};

/// Ordering used for node ids: all-digit ids compare numerically and sort
/// before anything else; other ids compare lexicographically.
bool natural_less(std::string_view a, std::string_view b) noexcept;

/// Aggregate parallel records, drop self-loops and records whose aggregate
/// equals the threshold, and assign dense indices in natural id order.
SignedDigraph build_graph(std::span<const EdgeRecord> records,
                          const PreprocessConfig& config);

/// Weakly connected components, largest first; equal sizes are ordered by
/// their smallest member index. Members are ascending.
std::vector<std::vector<NodeIndex>> weak_components(const SignedDigraph& graph);

/// Giant-component selection and iterative pendant pruning.
SignedDigraph preprocess(const SignedDigraph& graph,
                         const PreprocessConfig& config);

/// Collapse reciprocal arcs: equal signs merge, opposite signs cancel, a lone
/// arc keeps its sign.
SignedGraph project_undirected(const SignedDigraph& graph);

/// Unordered pairs (u < v) whose reciprocal arcs disagree in sign, i.e. the
/// pairs dropped by project_undirected.
std::vector<std::pair<NodeIndex, NodeIndex>> sign_mismatch_pairs(
    const SignedDigraph& graph);

}  // namespace signbal
