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
#include <optional>
#include <span>
#include <string_view>

#include "signbal/census.hpp"
#include "signbal/graph.hpp"
#include "signbal/parallel.hpp"

namespace signbal {

/// A triple is balanced when it carries an even number of negative arcs.
constexpr bool triple_is_balanced(const Triple& t) noexcept {
  return t.negative_count() % 2 == 0;
}

enum class TriadClass { CompletelyBalanced, PartiallyBalanced, CompletelyImbalanced };

std::string_view to_string(TriadClass c) noexcept;

struct TriadBalance {
  Triad triad;
  std::size_t balanced_triples = 0;
  std::size_t total_triples = 0;
  double ratio = 0.0;
  TriadClass classification = TriadClass::CompletelyBalanced;
};

/// Partial balance of one transitive triad; ContractError otherwise.
TriadBalance triad_balance(const SignedDigraph& graph, const Triad& triad);

struct TypeBalance {
  TriadType type = TriadType::T030T;
  std::uint64_t triad_count = 0;
  std::uint64_t balanced_triples = 0;
  std::uint64_t total_triples = 0;
  /// Triple-weighted ratio; empty when no triad of this type exists.
  std::optional<double> ratio;

  friend bool operator==(const TypeBalance&, const TypeBalance&) = default;
};

using TypeBalances = std::array<TypeBalance, 4>;

enum class BalanceMode { TypeMean, TriadMean };

std::string_view to_string(BalanceMode m) noexcept;
std::optional<BalanceMode> parse_balance_mode(std::string_view name) noexcept;

/// Unweighted mean of the ratios of the types that are present. Throws
/// UndefinedResultError when none is present.
double type_mean(std::span<const TypeBalance> types);

struct NonPartialBalance {
  double ratio = 0.0;
  std::uint64_t balanced = 0;
  std::uint64_t imbalanced = 0;
};

struct UndirectedBalance {
  std::uint64_t triangles = 0;
  std::uint64_t balanced = 0;
  std::uint64_t imbalanced = 0;
  /// Empty when the projection has no triangle.
  std::optional<double> ratio;
};

struct ClassificationCounts {
  std::uint64_t completely_balanced = 0;
  std::uint64_t partially_balanced = 0;
  std::uint64_t completely_imbalanced = 0;

  std::uint64_t total() const noexcept {
    return completely_balanced + partially_balanced + completely_imbalanced;
  }
};

/// Everything derivable from one pass over the transitive triads. Integer
/// tallies only, so merging partitions is exact and order independent.
struct BalanceTally {
  struct PerType {
    std::uint64_t triads = 0;
    std::uint64_t balanced_triples = 0;
    std::uint64_t total_triples = 0;
  };
  std::array<PerType, 4> per_type{};
  /// Sum over triads of 6 * balanced / total (exact: totals divide 6).
  std::uint64_t ratio_sixths = 0;
  ClassificationCounts classes;
  /// Triples by negative-arc count 0..3.
  std::array<std::uint64_t, 4> by_negatives{};

  void add(const Triad& triad);
  void merge(const BalanceTally& other);
  std::uint64_t triads() const noexcept { return classes.total(); }
};

BalanceTally tally_transitive_triads(const SignedDigraph& graph,
                                     unsigned threads = default_thread_count());

TypeBalances type_balance(const SignedDigraph& graph,
                          unsigned threads = default_thread_count());

/// Graph-level partial balance. UndefinedResultError without transitive
/// triads.
double overall_balance(const SignedDigraph& graph, BalanceMode mode,
                       unsigned threads = default_thread_count());

/// A triad counts as balanced only when every triple is balanced.
NonPartialBalance nonpartial_balance(const SignedDigraph& graph,
                                     unsigned threads = default_thread_count());

/// Triangle balance of an undirected projection (sign product rule).
UndirectedBalance undirected_balance(const SignedGraph& graph);

struct BalanceReport {
  TypeBalances per_type{};
  std::optional<double> overall_type_mean;
  std::optional<double> overall_triad_mean;
  std::optional<NonPartialBalance> nonpartial;
  ClassificationCounts counts;
  std::optional<UndirectedBalance> undirected;

  std::uint64_t transitive_triads() const noexcept { return counts.total(); }
  /// Ratio selected by `mode`; UndefinedResultError when absent.
  double overall(BalanceMode mode) const;
};

BalanceReport make_balance_report(const BalanceTally& tally);
BalanceReport analyze_balance(const SignedDigraph& graph, bool with_undirected,
                              unsigned threads = default_thread_count());

}  // namespace signbal
