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

#include "signbal/graph.hpp"

#include <algorithm>
#include <string>

#include "signbal/errors.hpp"

namespace signbal {

namespace {

bool all_digits(std::string_view s) noexcept {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) {
    return c >= '0' && c <= '9';
  });
}

std::string_view strip_leading_zeros(std::string_view s) noexcept {
  const auto pos = s.find_first_not_of('0');
  return pos == std::string_view::npos ? s.substr(s.size() - 1) : s.substr(pos);
}

NodeIndex entry_node(const Dyad& d) noexcept { return d.other; }
NodeIndex entry_node(const SignedNeighbor& n) noexcept { return n.node; }

template <class Span>
auto find_neighbor(const Span& list, NodeIndex other) {
  return std::lower_bound(
      list.begin(), list.end(), other,
      [](const auto& entry, NodeIndex key) { return entry_node(entry) < key; });
}

}  // namespace

bool natural_less(std::string_view a, std::string_view b) noexcept {
  const bool da = all_digits(a);
  const bool db = all_digits(b);
  if (da != db) return da;
  if (da) {
    const auto sa = strip_leading_zeros(a);
    const auto sb = strip_leading_zeros(b);
    if (sa.size() != sb.size()) return sa.size() < sb.size();
    if (sa != sb) return sa < sb;
  }
  return a < b;
}

SignedDigraph::SignedDigraph(std::vector<std::string> labels,
                             std::vector<Edge> edges)
    : labels_(std::move(labels)) {
  const std::size_t n = labels_.size();
  index_.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!index_.emplace(labels_[i], static_cast<NodeIndex>(i)).second) {
      throw ContractError("duplicate node id '" + labels_[i] + "'");
    }
  }

  std::sort(edges.begin(), edges.end(), [](const Edge& x, const Edge& y) {
    return std::pair(x.source, x.target) < std::pair(y.source, y.target);
  });
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const Edge& e = edges[i];
    if (e.source >= n || e.target >= n) {
      throw ContractError("edge endpoint out of range");
    }
    if (e.source == e.target) {
      throw ContractError("self-loop on node '" + labels_[e.source] + "'");
    }
    if (i > 0 && edges[i - 1].source == e.source &&
        edges[i - 1].target == e.target) {
      throw ContractError("duplicate edge " + labels_[e.source] + " -> " +
                          labels_[e.target]);
    }
  }
  edge_count_ = edges.size();

  // Each arc contributes one dyad half to both endpoints; reciprocal arcs
  // merge into a single entry after sorting.
  std::vector<std::vector<Dyad>> lists(n);
  out_degree_.assign(n, 0);
  in_degree_.assign(n, 0);
  for (const Edge& e : edges) {
    Dyad fwd{e.target};
    fwd.out = true;
    fwd.out_sign = e.sign;
    lists[e.source].push_back(fwd);
    Dyad back{e.source};
    back.in = true;
    back.in_sign = e.sign;
    lists[e.target].push_back(back);
    ++out_degree_[e.source];
    ++in_degree_[e.target];
  }
  for (auto& list : lists) {
    std::sort(list.begin(), list.end(), [](const Dyad& x, const Dyad& y) {
      return x.other < y.other;
    });
    std::size_t w = 0;
    for (std::size_t r = 0; r < list.size(); ++r) {
      if (w > 0 && list[w - 1].other == list[r].other) {
        Dyad& merged = list[w - 1];
        if (list[r].out) {
          merged.out = true;
          merged.out_sign = list[r].out_sign;
        }
        if (list[r].in) {
          merged.in = true;
          merged.in_sign = list[r].in_sign;
        }
      } else {
        list[w++] = list[r];
      }
    }
    list.resize(w);
  }

  offsets_.assign(n + 1, 0);
  for (std::size_t v = 0; v < n; ++v) {
    offsets_[v + 1] = offsets_[v] + lists[v].size();
  }
  dyads_.reserve(offsets_[n]);
  for (auto& list : lists) {
    dyads_.insert(dyads_.end(), list.begin(), list.end());
  }
}

const std::string& SignedDigraph::label(NodeIndex v) const {
  if (v >= labels_.size()) {
    throw LookupError("node index " + std::to_string(v) + " out of range");
  }
  return labels_[v];
}

std::optional<NodeIndex> SignedDigraph::find(std::string_view label) const {
  auto it = index_.find(std::string(label));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

NodeIndex SignedDigraph::index_of(std::string_view label) const {
  if (auto v = find(label)) return *v;
  throw LookupError("unknown node id '" + std::string(label) + "'");
}

std::span<const Dyad> SignedDigraph::dyads(NodeIndex v) const {
  if (v >= labels_.size()) {
    throw LookupError("node index " + std::to_string(v) + " out of range");
  }
  return std::span<const Dyad>(dyads_).subspan(offsets_[v],
                                                offsets_[v + 1] - offsets_[v]);
}

std::optional<Dyad> SignedDigraph::dyad(NodeIndex u, NodeIndex v) const {
  const auto list = dyads(u);
  auto it = find_neighbor(list, v);
  if (it == list.end() || it->other != v) return std::nullopt;
  return *it;
}

std::optional<Sign> SignedDigraph::edge_sign(NodeIndex source,
                                             NodeIndex target) const {
  const auto d = dyad(source, target);
  if (!d || !d->out) return std::nullopt;
  return d->out_sign;
}

std::vector<SignedDigraph::Edge> SignedDigraph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (NodeIndex v = 0; v < labels_.size(); ++v) {
    for (const Dyad& d : dyads(v)) {
      if (d.out) out.push_back(Edge{v, d.other, d.out_sign});
    }
  }
  return out;
}

SignedDigraph SignedDigraph::induced(std::span<const NodeIndex> keep) const {
  std::vector<NodeIndex> remap(labels_.size(), static_cast<NodeIndex>(-1));
  std::vector<std::string> labels;
  labels.reserve(keep.size());
  for (NodeIndex v : keep) {
    remap.at(v) = static_cast<NodeIndex>(labels.size());
    labels.push_back(labels_[v]);
  }
  std::vector<Edge> kept;
  for (NodeIndex v : keep) {
    for (const Dyad& d : dyads(v)) {
      if (d.out && remap[d.other] != static_cast<NodeIndex>(-1)) {
        kept.push_back(Edge{remap[v], remap[d.other], d.out_sign});
      }
    }
  }
  return SignedDigraph(std::move(labels), std::move(kept));
}

bool operator==(const SignedDigraph& a, const SignedDigraph& b) {
  return a.labels_ == b.labels_ && a.edges() == b.edges();
}

SignedGraph::SignedGraph(std::vector<std::string> labels,
                         std::vector<Edge> edges)
    : labels_(std::move(labels)) {
  const std::size_t n = labels_.size();
  std::vector<std::vector<SignedNeighbor>> lists(n);
  for (Edge e : edges) {
    if (e.u > e.v) std::swap(e.u, e.v);
    if (e.v >= n) throw ContractError("edge endpoint out of range");
    if (e.u == e.v) throw ContractError("self-edge in undirected graph");
    lists[e.u].push_back({e.v, e.sign});
    lists[e.v].push_back({e.u, e.sign});
  }
  offsets_.assign(n + 1, 0);
  for (std::size_t v = 0; v < n; ++v) {
    auto& list = lists[v];
    std::sort(list.begin(), list.end(),
              [](const auto& x, const auto& y) { return x.node < y.node; });
    for (std::size_t i = 1; i < list.size(); ++i) {
      if (list[i].node == list[i - 1].node) {
        throw ContractError("duplicate undirected edge " + labels_[v] + " - " +
                            labels_[list[i].node]);
      }
    }
    offsets_[v + 1] = offsets_[v] + list.size();
  }
  neighbors_.reserve(offsets_[n]);
  for (auto& list : lists) {
    neighbors_.insert(neighbors_.end(), list.begin(), list.end());
  }
}

const std::string& SignedGraph::label(NodeIndex v) const {
  if (v >= labels_.size()) {
    throw LookupError("node index " + std::to_string(v) + " out of range");
  }
  return labels_[v];
}

std::span<const SignedNeighbor> SignedGraph::neighbors(NodeIndex v) const {
  if (v >= labels_.size()) {
    throw LookupError("node index " + std::to_string(v) + " out of range");
  }
  return std::span<const SignedNeighbor>(neighbors_).subspan(
      offsets_[v], offsets_[v + 1] - offsets_[v]);
}

std::optional<Sign> SignedGraph::edge_sign(NodeIndex u, NodeIndex v) const {
  const auto list = neighbors(u);
  auto it = find_neighbor(list, v);
  if (it == list.end() || it->node != v) return std::nullopt;
  return it->sign;
}

std::vector<SignedGraph::Edge> SignedGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count());
  for (NodeIndex u = 0; u < labels_.size(); ++u) {
    for (const auto& nb : neighbors(u)) {
      if (u < nb.node) out.push_back({u, nb.node, nb.sign});
    }
  }
  return out;
}

SignedGraph project_undirected(const SignedDigraph& graph) {
  std::vector<SignedGraph::Edge> edges;
  for (NodeIndex u = 0; u < graph.node_count(); ++u) {
    for (const Dyad& d : graph.dyads(u)) {
      if (d.other < u) continue;
      if (d.out && d.in) {
        if (d.out_sign == d.in_sign) edges.push_back({u, d.other, d.out_sign});
      } else {
        edges.push_back({u, d.other, d.out ? d.out_sign : d.in_sign});
      }
    }
  }
  const auto labels = graph.labels();
  return SignedGraph(std::vector<std::string>(labels.begin(), labels.end()),
                     std::move(edges));
}

std::vector<std::pair<NodeIndex, NodeIndex>> sign_mismatch_pairs(
    const SignedDigraph& graph) {
  std::vector<std::pair<NodeIndex, NodeIndex>> out;
  for (NodeIndex u = 0; u < graph.node_count(); ++u) {
    for (const Dyad& d : graph.dyads(u)) {
      if (d.other > u && d.mutual() && d.out_sign != d.in_sign) {
        out.emplace_back(u, d.other);
      }
    }
  }
  return out;
}

}  // namespace signbal
