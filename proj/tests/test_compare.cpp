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

#include "doctest.h"
#include "helpers.hpp"
#include "signbal/compare.hpp"

using namespace signbal;
using testing::digraph;

TEST_SUITE("compare") {

TEST_CASE("mismatched reciprocal pair is listed") {
  const auto g = digraph({{"u", "v", 1}, {"v", "u", -1}, {"u", "w", 1}, {"v", "w", 1}});
  const auto c = compare_realizations(g, 1);
  REQUIRE(c.canceled_pairs.size() == 1);
  CHECK(g.label(c.canceled_pairs[0].first) == "u");
  CHECK(g.label(c.canceled_pairs[0].second) == "v");
  // The triad survives directed but loses an edge undirected.
  CHECK(c.directed.transitive_triads() == 1);
  CHECK(c.directed_only.size() == 1);
  CHECK(c.undirected_only.empty());
}

TEST_CASE("directed 3-cycle appears only undirected") {
  const auto g = digraph({{"a", "b", 1}, {"b", "c", 1}, {"c", "a", -1}, {"c", "d", 1},
                          {"d", "e", -1}});
  const auto c = compare_realizations(g, 1);
  CHECK(c.directed.transitive_triads() == 0);
  CHECK(c.directed.undirected->triangles == 1);
  REQUIRE(c.undirected_only.size() == 1);
  CHECK(c.undirected_only[0] == std::array<NodeIndex, 3>{0, 1, 2});
  CHECK_FALSE(c.identical_composition());
}

TEST_CASE("mutual consistent graph is identical") {
  const auto g = digraph({{"a", "b", 1}, {"b", "a", 1}, {"a", "c", -1}, {"c", "a", -1},
                          {"b", "c", -1}, {"c", "b", -1}});
  const auto c = compare_realizations(g, 1);
  CHECK(c.identical_composition());
  CHECK(c.directed_composition.count(Composition::PNN) == 6);
  CHECK(c.undirected_composition.count(Composition::PNN) == 1);
}

TEST_CASE("same triads with different sign proportions are not identical") {
  // A positive 300 weighs six triples against one for the 030T, but both
  // count once as triangles.
  const auto g = digraph({{"a", "b", 1}, {"b", "a", 1}, {"a", "c", 1}, {"c", "a", 1},
                          {"b", "c", 1}, {"c", "b", 1}, {"c", "d", 1}, {"d", "e", 1},
                          {"c", "e", -1}});
  const auto c = compare_realizations(g, 1);
  CHECK(c.directed_only.empty());
  CHECK(c.undirected_only.empty());
  CHECK(c.directed_composition.count(Composition::PPP) == 6);
  CHECK(c.directed_composition.count(Composition::PPN) == 1);
  CHECK(c.undirected_composition.count(Composition::PPP) == 1);
  CHECK(c.undirected_composition.count(Composition::PPN) == 1);
  CHECK_FALSE(c.identical_composition());
}

}  // TEST_SUITE
