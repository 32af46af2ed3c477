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
#include "signbal/balance.hpp"
#include "signbal/errors.hpp"
#include "signbal/oracle.hpp"

using namespace signbal;
using testing::digraph;

namespace {

SignedDigraph mutual_triangle(int ab, int ba, int ac, int ca, int bc, int cb) {
  return digraph({{"a", "b", ab}, {"b", "a", ba}, {"a", "c", ac}, {"c", "a", ca},
                  {"b", "c", bc}, {"c", "b", cb}});
}

}  // namespace

TEST_SUITE("balance") {

TEST_CASE("balanced triple has an even number of negatives") {
  Triple t;
  CHECK(triple_is_balanced(t));
  t.signs = {Sign::Negative, Sign::Negative, Sign::Positive};
  CHECK(triple_is_balanced(t));
  t.signs = {Sign::Negative, Sign::Positive, Sign::Positive};
  CHECK_FALSE(triple_is_balanced(t));
  t.signs = {Sign::Negative, Sign::Negative, Sign::Negative};
  CHECK_FALSE(triple_is_balanced(t));
}

TEST_CASE("triad classification") {
  auto g = digraph({{"a", "b", 1}, {"b", "c", -1}, {"a", "c", -1}});
  auto tb = triad_balance(g, make_triad(g, 0, 1, 2));
  CHECK(tb.ratio == 1.0);
  CHECK(tb.classification == TriadClass::CompletelyBalanced);

  g = digraph({{"a", "b", 1}, {"b", "c", -1}, {"a", "c", 1}});
  tb = triad_balance(g, make_triad(g, 0, 1, 2));
  CHECK(tb.ratio == 0.0);
  CHECK(tb.classification == TriadClass::CompletelyImbalanced);

  // 300 with one negative arc a->b: the three triples using it are imbalanced.
  g = mutual_triangle(-1, 1, 1, 1, 1, 1);
  tb = triad_balance(g, make_triad(g, 0, 1, 2));
  CHECK(tb.total_triples == 6);
  CHECK(tb.balanced_triples == 3);
  CHECK(tb.classification == TriadClass::PartiallyBalanced);
  CHECK(to_string(tb.classification) == "partially-balanced");
}

TEST_CASE("modes on a small mixed graph") {
  // 030T on {a,b,c} (balanced) and a 300 on {c,d,e} with one negative arc.
  const auto g = digraph({{"a", "b", 1}, {"b", "c", 1}, {"a", "c", 1}, {"c", "d", -1},
                          {"d", "c", 1}, {"c", "e", 1}, {"e", "c", 1}, {"d", "e", 1},
                          {"e", "d", 1}});
  const auto r = analyze_balance(g, true, 2);
  CHECK(r.transitive_triads() == 2);
  CHECK(r.per_type[0].ratio == 1.0);
  CHECK_FALSE(r.per_type[1].ratio.has_value());
  CHECK(r.per_type[3].ratio == 0.5);
  CHECK(*r.overall_type_mean == 0.75);
  CHECK(*r.overall_triad_mean == 0.75);
  CHECK(r.nonpartial->ratio == 0.5);
  CHECK(r.nonpartial->balanced == 1);
  CHECK(r.nonpartial->imbalanced == 1);
  CHECK(r.counts.partially_balanced == 1);
  // c-d cancels in the projection, so only the a,b,c triangle remains.
  REQUIRE(r.undirected);
  CHECK(r.undirected->triangles == 1);
  CHECK(r.undirected->ratio == 1.0);
  CHECK(r.overall(BalanceMode::TypeMean) == *r.overall_type_mean);
}

TEST_CASE("type-mean and triad-mean differ when types are unevenly populated") {
  const auto g = oracle::random_signed_digraph(25, 0.3, 0.4, 5);
  const auto r = analyze_balance(g, false);
  REQUIRE(r.transitive_triads() > 0);
  CHECK(*r.overall_type_mean != *r.overall_triad_mean);
  CHECK(r.nonpartial->ratio <= *r.overall_triad_mean);
}

TEST_CASE("undefined without transitive triads") {
  const auto g = digraph({{"a", "b", 1}, {"b", "c", 1}, {"c", "a", 1}});
  const auto r = analyze_balance(g, true);
  CHECK(r.transitive_triads() == 0);
  CHECK_FALSE(r.overall_type_mean.has_value());
  CHECK_THROWS_AS(r.overall(BalanceMode::TriadMean), UndefinedResultError);
  CHECK_THROWS_AS(overall_balance(g, BalanceMode::TypeMean), UndefinedResultError);
  CHECK_THROWS_AS(nonpartial_balance(g), UndefinedResultError);
  TypeBalances none{};
  CHECK_THROWS_AS(type_mean(none), UndefinedResultError);
}

TEST_CASE("all-positive graphs score 1.0") {
  const auto g = oracle::random_signed_digraph(30, 0.3, 0.0, 8);
  const auto r = analyze_balance(g, true);
  REQUIRE(r.transitive_triads() > 0);
  CHECK(*r.overall_type_mean == 1.0);
  CHECK(*r.overall_triad_mean == 1.0);
  CHECK(r.nonpartial->ratio == 1.0);
  CHECK(*r.undirected->ratio == 1.0);
}

TEST_CASE("symmetric graphs: 300 ratio equals undirected ratio") {
  const auto base = oracle::random_signed_digraph(20, 0.4, 0.4, 21);
  std::vector<SignedDigraph::Edge> edges;
  for (const auto& e : base.edges()) {
    if (e.source < e.target) {
      edges.push_back(e);
      edges.push_back({e.target, e.source, e.sign});
    }
  }
  const SignedDigraph g(std::vector<std::string>(base.labels().begin(), base.labels().end()),
                        std::move(edges));
  const auto r = analyze_balance(g, true);
  CHECK(r.per_type[3].triad_count == r.transitive_triads());
  CHECK(r.per_type[3].triad_count == r.undirected->triangles);
  CHECK(*r.per_type[3].ratio == doctest::Approx(*r.undirected->ratio).epsilon(1e-12));
}

TEST_CASE("results do not depend on the worker count") {
  const auto g = oracle::random_signed_digraph(80, 0.1, 0.3, 3);
  const auto a = tally_transitive_triads(g, 1);
  const auto b = tally_transitive_triads(g, 5);
  CHECK(a.ratio_sixths == b.ratio_sixths);
  CHECK(a.by_negatives == b.by_negatives);
  CHECK(make_balance_report(a).per_type == make_balance_report(b).per_type);
}

TEST_CASE("balance mode names") {
  CHECK(parse_balance_mode("type-mean") == BalanceMode::TypeMean);
  CHECK(parse_balance_mode("triad-mean") == BalanceMode::TriadMean);
  CHECK_FALSE(parse_balance_mode("mean").has_value());
}

}  // TEST_SUITE
