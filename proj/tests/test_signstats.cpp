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

#include <cmath>
#include <limits>

#include "doctest.h"
#include "helpers.hpp"
#include "signbal/errors.hpp"
#include "signbal/oracle.hpp"
#include "signbal/signstats.hpp"

using namespace signbal;
using testing::digraph;

namespace {

// Independent all-pairs BFS and all-triples transitivity on the skeleton.
struct Reference {
  double path = 0;
  double transitivity = 0;
  double clustering = 0;
};

Reference reference(const SignedDigraph& g) {
  const std::size_t n = g.node_count();
  std::vector<std::vector<int>> adj(n, std::vector<int>(n, 0));
  for (const auto& e : g.edges()) adj[e.source][e.target] = adj[e.target][e.source] = 1;
  const int inf = std::numeric_limits<int>::max() / 4;
  std::vector<std::vector<int>> d(n, std::vector<int>(n, inf));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) d[i][j] = 0;
      else if (adj[i][j]) d[i][j] = 1;
    }
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
  double sum = 0;
  double pairs = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && d[i][j] < inf) {
        sum += d[i][j];
        ++pairs;
      }
  Reference r;
  r.path = sum / pairs;
  double closed = 0;
  double connected = 0;
  double local = 0;
  for (std::size_t v = 0; v < n; ++v) {
    double links = 0;
    double wedges = 0;
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a + 1; b < n; ++b)
        if (a != v && b != v && adj[v][a] && adj[v][b]) {
          ++wedges;
          links += adj[a][b];
        }
    closed += links;
    connected += wedges;
    if (wedges > 0) local += links / wedges;
  }
  r.transitivity = connected > 0 ? closed / connected : 0;
  r.clustering = local / static_cast<double>(n);
  return r;
}

}  // namespace

TEST_SUITE("signstats") {

TEST_CASE("composition keys") {
  CHECK(composition_from_negatives(0) == Composition::PPP);
  CHECK(composition_from_negatives(1) == Composition::PPN);
  CHECK(composition_from_negatives(2) == Composition::PNN);
  CHECK(composition_from_negatives(3) == Composition::NNN);
  CHECK(to_string(Composition::PNN) == "+--");
  CHECK(key_of(Composition::PPN) == "ppn");
}

TEST_CASE("directed composition counts triples") {
  // 300 with one negative reciprocal pair a<->b.
  const auto g = digraph({{"a", "b", -1}, {"b", "a", -1}, {"a", "c", 1}, {"c", "a", 1},
                          {"b", "c", 1}, {"c", "b", 1}});
  const auto d = composition_directed(g);
  CHECK(d.total() == 6);
  CHECK(d.count(Composition::PPN) == 6);
  const auto u = composition_undirected(project_undirected(g));
  CHECK(u.total() == 1);
  CHECK(u.count(Composition::PPN) == 1);
  CHECK(u.proportion(Composition::PPN) == 1.0);
  CompositionTable empty;
  CHECK(empty.proportion(Composition::PPP) == 0.0);
}

TEST_CASE("sign flip swaps compositions") {
  const auto g = oracle::random_signed_digraph(25, 0.3, 0.3, 9);
  auto edges = g.edges();
  for (auto& e : edges) e.sign = flip(e.sign);
  const SignedDigraph f(std::vector<std::string>(g.labels().begin(), g.labels().end()),
                        std::move(edges));
  const auto a = composition_directed(g);
  const auto b = composition_directed(f);
  CHECK(a.total() == b.total());
  CHECK(a.count(Composition::PPP) == b.count(Composition::NNN));
  CHECK(a.count(Composition::PNN) == b.count(Composition::PPN));
  double sum = 0;
  for (Composition c : kCompositions) sum += a.proportion(c);
  CHECK(std::fabs(sum - 1.0) <= 1e-9);
}

TEST_CASE("metrics on a path") {
  const auto g = digraph({{"a", "b", 1}, {"b", "c", 1}, {"c", "d", -1}});
  const auto m = metrics(g, 1);
  CHECK(m.node_count == 4);
  CHECK(m.density == doctest::Approx(3.0 / 12.0));
  CHECK(m.avg_path_length == doctest::Approx(20.0 / 12.0));
  CHECK(m.transitivity == 0.0);
  CHECK(m.clustering_coefficient == 0.0);
  CHECK(m.component_count == 1);
}

TEST_CASE("metrics match brute-force references") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto g = oracle::random_signed_digraph(5 + seed, 0.25, 0.3, seed);
    if (g.edge_count() == 0) continue;
    const auto ref = reference(g);
    const auto m = metrics(g, 2);
    CHECK(m.avg_path_length == doctest::Approx(ref.path).epsilon(1e-12));
    CHECK(m.transitivity == doctest::Approx(ref.transitivity).epsilon(1e-12));
    CHECK(m.clustering_coefficient == doctest::Approx(ref.clustering).epsilon(1e-12));
  }
}

TEST_CASE("metrics are undefined on tiny or edgeless graphs") {
  CHECK_THROWS_AS(metrics(SignedDigraph({"a"}, {})), UndefinedResultError);
  CHECK_THROWS_AS(metrics(SignedDigraph({"a", "b"}, {})), UndefinedResultError);
}

}  // TEST_SUITE
