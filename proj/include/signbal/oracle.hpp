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

// Exhaustive reference implementations for small graphs. Nothing here calls
// into the census, balance or projection code; results are compared against
// those fast paths by the test suite.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "signbal/census.hpp"
#include "signbal/graph.hpp"
#include "signbal/signstats.hpp"

namespace signbal::oracle {

inline constexpr std::size_t kMaxNodes = 200;

struct Ratios {
  std::array<std::uint64_t, 4> type_triads{};  // 030T, 120D, 120U, 300
  std::array<std::optional<double>, 4> per_type;
  std::optional<double> type_mean;
  std::optional<double> triad_mean;
  std::optional<double> nonpartial;
  std::uint64_t completely_balanced = 0;
  std::uint64_t partially_balanced = 0;
  std::uint64_t completely_imbalanced = 0;
  std::optional<double> undirected;
  std::uint64_t triangles = 0;
  std::uint64_t balanced_triangles = 0;
};

struct Result {
  CensusTable census;
  /// Every triad with at least two connected dyads, in lexicographic order.
  std::vector<Triad> triads;
  Ratios ratios;
  CompositionTable directed_composition;
  CompositionTable undirected_composition;
};

/// LimitError when the graph has more than kMaxNodes nodes.
Result brute_force(const SignedDigraph& graph);

/// Each ordered pair (u, v), u != v, in row-major order draws one uniform
/// variate from std::mt19937_64(seed) as (x >> 11) * 2^-53; an arc exists
/// when it is < edge_prob, and only then a second variate < neg_prob makes
/// it negative. Labels are "0" .. "n-1".
SignedDigraph random_signed_digraph(std::size_t n, double edge_prob,
                                    double neg_prob, std::uint64_t seed);

/// Human-readable descriptions of every field where the fast paths and the
/// oracle disagree. Ratios must agree to within 1e-12.
std::vector<std::string> compare_with_fast_path(const SignedDigraph& graph,
                                                unsigned threads = 1);

}  // namespace signbal::oracle
