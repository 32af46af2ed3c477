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

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <set>

#include "signbal/errors.hpp"
#include "signbal/graph.hpp"

namespace signbal {

void PreprocessConfig::validate() const {
  if (!std::isfinite(sign_threshold)) {
    throw ContractError("sign threshold must be finite");
  }
}

namespace {

struct NaturalOrder {
  bool operator()(const std::string& a, const std::string& b) const noexcept {
    return natural_less(a, b);
  }
};

struct Accumulator {
  double sum = 0.0;
  double last = 0.0;
  std::size_t count = 0;
};

}  // namespace

SignedDigraph build_graph(std::span<const EdgeRecord> records,
                          const PreprocessConfig& config) {
  config.validate();

  std::set<std::string, NaturalOrder> ids;
  for (const auto& r : records) {
    ids.insert(r.source);
    ids.insert(r.target);
  }
  std::vector<std::string> labels(ids.begin(), ids.end());
  std::map<std::string, NodeIndex, std::less<>> index;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    index.emplace(labels[i], static_cast<NodeIndex>(i));
  }

  std::map<std::pair<NodeIndex, NodeIndex>, Accumulator> pairs;
  for (const auto& r : records) {
    if (!std::isfinite(r.weight)) {
      throw ContractError("non-finite weight on record " + r.source + " -> " +
                          r.target);
    }
    if (r.source == r.target) continue;
    auto& acc = pairs[{index.at(r.source), index.at(r.target)}];
    acc.sum += r.weight;
    acc.last = r.weight;
    ++acc.count;
  }

  std::vector<SignedDigraph::Edge> edges;
  edges.reserve(pairs.size());
  for (const auto& [key, acc] : pairs) {
    double value = 0.0;
    switch (config.aggregate) {
      case AggregateRule::SumThenSign: value = acc.sum; break;
      case AggregateRule::LastRecord: value = acc.last; break;
      case AggregateRule::MeanThenSign:
        value = acc.sum / static_cast<double>(acc.count);
        break;
    }
    if (value > config.sign_threshold) {
      edges.push_back({key.first, key.second, Sign::Positive});
    } else if (value < config.sign_threshold) {
      edges.push_back({key.first, key.second, Sign::Negative});
    }
  }
  return SignedDigraph(std::move(labels), std::move(edges));
}

std::vector<std::vector<NodeIndex>> weak_components(const SignedDigraph& graph) {
  const std::size_t n = graph.node_count();
  std::vector<int> seen(n, 0);
  std::vector<std::vector<NodeIndex>> components;
  std::vector<NodeIndex> stack;
  for (NodeIndex root = 0; root < n; ++root) {
    if (seen[root]) continue;
    std::vector<NodeIndex> members;
    seen[root] = 1;
    stack.push_back(root);
    while (!stack.empty()) {
      const NodeIndex v = stack.back();
      stack.pop_back();
      members.push_back(v);
      for (const Dyad& d : graph.dyads(v)) {
        if (!seen[d.other]) {
          seen[d.other] = 1;
          stack.push_back(d.other);
        }
      }
    }
    std::sort(members.begin(), members.end());
    components.push_back(std::move(members));
  }
  // Roots are visited in ascending order, so the first member of each
  // component is its minimum; stable sort keeps that as the tie-break.
  std::stable_sort(components.begin(), components.end(),
                   [](const auto& a, const auto& b) { return a.size() > b.size(); });
  return components;
}

namespace {

SignedDigraph giant_component(const SignedDigraph& graph) {
  if (graph.node_count() == 0) return graph;
  const auto components = weak_components(graph);
  return graph.induced(components.front());
}

SignedDigraph prune_pendants(const SignedDigraph& graph) {
  const std::size_t n = graph.node_count();
  std::vector<std::size_t> degree(n);
  std::vector<NodeIndex> queue;
  std::vector<char> removed(n, 0);
  for (NodeIndex v = 0; v < n; ++v) {
    degree[v] = graph.total_degree(v);
    if (degree[v] <= 1) {
      removed[v] = 1;
      queue.push_back(v);
    }
  }
  while (!queue.empty()) {
    const NodeIndex v = queue.back();
    queue.pop_back();
    for (const Dyad& d : graph.dyads(v)) {
      if (removed[d.other]) continue;
      degree[d.other] -= static_cast<std::size_t>(d.out) + static_cast<std::size_t>(d.in);
      if (degree[d.other] <= 1) {
        removed[d.other] = 1;
        queue.push_back(d.other);
      }
    }
  }
  std::vector<NodeIndex> keep;
  for (NodeIndex v = 0; v < n; ++v) {
    if (!removed[v]) keep.push_back(v);
  }
  return graph.induced(keep);
}

}  // namespace

SignedDigraph preprocess(const SignedDigraph& graph,
                         const PreprocessConfig& config) {
  config.validate();
  const bool giant = config.keep_component == ComponentPolicy::Giant;
  SignedDigraph out = giant ? giant_component(graph) : graph;
  if (config.prune_pendants) {
    out = prune_pendants(out);
    if (giant) out = giant_component(out);
  }
  return out;
}

}  // namespace signbal
