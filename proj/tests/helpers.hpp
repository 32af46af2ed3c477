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

#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "signbal/graph.hpp"

namespace testing {

// Builds a digraph from ("a", "b", +1) style arcs; labels are sorted.
inline signbal::SignedDigraph digraph(
    const std::vector<std::tuple<std::string, std::string, int>>& arcs,
    std::vector<std::string> extra_nodes = {}) {
  std::vector<signbal::EdgeRecord> records;
  for (const auto& [u, v, s] : arcs) records.push_back({u, v, static_cast<double>(s), {}});
  signbal::PreprocessConfig cfg;
  auto g = signbal::build_graph(records, cfg);
  if (extra_nodes.empty()) return g;
  std::vector<std::string> labels(g.labels().begin(), g.labels().end());
  for (auto& x : extra_nodes) labels.push_back(std::move(x));
  std::vector<signbal::SignedDigraph::Edge> edges = g.edges();
  return signbal::SignedDigraph(std::move(labels), std::move(edges));
}

}  // namespace testing
