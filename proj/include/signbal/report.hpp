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

// Report rendering. CSV output rounds ratios to two decimals; JSON keeps
// full double precision and writes absent values as null.

#include <string>
#include <string_view>

#include "signbal/balance.hpp"
#include "signbal/census.hpp"
#include "signbal/compare.hpp"
#include "signbal/signstats.hpp"

namespace signbal::report {

/// "%.2f".
std::string two_decimals(double value);

std::string census_csv(const CensusTable& table);
std::string census_json(const CensusTable& table);

std::string balance_csv(const BalanceReport& report, BalanceMode mode);
std::string balance_json(const BalanceReport& report, BalanceMode mode);

std::string composition_csv(std::string_view network, const CompositionTable& directed,
                            const CompositionTable& undirected);
std::string composition_json(const CompositionTable& directed,
                             const CompositionTable& undirected);

std::string metrics_csv(const GraphMetrics& m);
std::string metrics_json(const GraphMetrics& m);

/// Directed-partial, directed-non-partial and undirected figures side by side.
std::string compare_csv(std::string_view network, const RealizationComparison& c,
                        BalanceMode mode);
std::string compare_json(const RealizationComparison& c, const SignedDigraph& graph,
                         BalanceMode mode);

/// "directed = undirected" or "directed != undirected".
std::string_view verdict(const RealizationComparison& c);

}  // namespace signbal::report
