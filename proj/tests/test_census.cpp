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
#include <array>

#include "doctest.h"
#include "helpers.hpp"
#include "signbal/census.hpp"
#include "signbal/errors.hpp"
#include "signbal/oracle.hpp"

using namespace signbal;
using testing::digraph;

namespace {

SignedDigraph from_code(unsigned code, const std::array<NodeIndex, 3>& perm) {
  // Bits: a->b 1, b->a 2, a->c 4, c->a 8, b->c 16, c->b 32.
  const std::pair<int, int> arcs[6] = {{0, 1}, {1, 0}, {0, 2}, {2, 0}, {1, 2}, {2, 1}};
  std::vector<SignedDigraph::Edge> edges;
  for (int bit = 0; bit < 6; ++bit) {
    if (code & (1u << bit)) {
      edges.push_back({perm[arcs[bit].first], perm[arcs[bit].second], Sign::Positive});
    }
  }
  return SignedDigraph({"a", "b", "c"}, std::move(edges));
}

}  // namespace

TEST_SUITE("census") {

TEST_CASE("type labels round-trip") {
  for (TriadType t : kAllTriadTypes) CHECK(parse_triad_type(to_string(t)) == t);
  CHECK_FALSE(parse_triad_type("400").has_value());
  CHECK(to_string(TriadType::T120D) == "120D");
}

TEST_CASE("classify_man examples") {
  auto g = digraph({{"a", "b", 1}, {"a", "c", 1}, {"b", "c", 1}});
  CHECK(classify_man(g, "a", "b", "c") == TriadType::T030T);
  g = digraph({{"a", "b", 1}, {"b", "c", 1}, {"c", "a", 1}});
  CHECK(classify_man(g, "a", "b", "c") == TriadType::T030C);
  g = digraph({{"a", "b", 1}, {"b", "a", 1}, {"a", "c", 1}, {"c", "a", 1}, {"b", "c", 1},
               {"c", "b", 1}});
  CHECK(classify_man(g, "c", "a", "b") == TriadType::T300);
  CHECK_THROWS_AS(classify_man(g, "a", "b", "zz"), LookupError);
  CHECK_THROWS_AS(classify_man(g, 0, 0, 1), ContractError);
}

TEST_CASE("orientation conventions") {
  auto g = digraph({{"a", "b", 1}, {"b", "a", 1}, {"c", "a", 1}, {"c", "b", 1}});
  CHECK(classify_man(g, "a", "b", "c") == TriadType::T120D);
  g = digraph({{"a", "b", 1}, {"b", "a", 1}, {"a", "c", 1}, {"b", "c", 1}});
  CHECK(classify_man(g, "a", "b", "c") == TriadType::T120U);
  g = digraph({{"a", "b", 1}, {"b", "a", 1}, {"c", "a", 1}});
  CHECK(classify_man(g, "a", "b", "c") == TriadType::T111D);
  g = digraph({{"a", "b", 1}, {"b", "a", 1}, {"a", "c", 1}});
  CHECK(classify_man(g, "a", "b", "c") == TriadType::T111U);
  g = digraph({{"a", "b", 1}, {"a", "c", 1}});
  CHECK(classify_man(g, "a", "b", "c") == TriadType::T021D);
  g = digraph({{"b", "a", 1}, {"c", "a", 1}});
  CHECK(classify_man(g, "a", "b", "c") == TriadType::T021U);
}

TEST_CASE("classification is invariant under relabelling") {
  std::array<int, kTriadTypeCount> seen{};
  for (unsigned code = 0; code < 64; ++code) {
    std::array<NodeIndex, 3> perm{0, 1, 2};
    const TriadType base = classify_man(from_code(code, perm), 0, 1, 2);
    ++seen[index_of(base)];
    while (std::next_permutation(perm.begin(), perm.end())) {
      const auto g = from_code(code, perm);
      CHECK(classify_man(g, 0, 1, 2) == base);
      CHECK(classify_man(g, 2, 0, 1) == base);
    }
  }
  // Standard isomorphism class sizes over the 64 labelled triads.
  const std::array<int, kTriadTypeCount> sizes{1, 6, 3, 3, 3, 6, 6, 6, 6, 2, 3, 3, 3, 6, 6, 1};
  CHECK(seen == sizes);
}

TEST_CASE("transitive triples") {
  auto g = digraph({{"a", "b", 1}, {"b", "c", -1}, {"a", "c", 1}});
  auto t = make_triad(g, 0, 1, 2);
  REQUIRE(t.triples().size() == 1);
  CHECK(t.triples()[0] == Triple{0, 1, 2, {Sign::Positive, Sign::Negative, Sign::Positive}});

  g = digraph({{"a", "b", 1}, {"b", "a", 1}, {"c", "a", 1}, {"c", "b", 1}});
  t = make_triad(g, 0, 1, 2);
  CHECK(t.type() == TriadType::T120D);
  const auto triples = transitive_triples(g, t);
  REQUIRE(triples.size() == 2);
  CHECK(triples[0].source == 2);
  CHECK(triples[0].mid == 0);
  CHECK(triples[0].sink == 1);
  CHECK(triples[1].source == 2);
  CHECK(triples[1].mid == 1);
  CHECK(triples[1].sink == 0);

  g = digraph({{"a", "b", 1}, {"b", "a", 1}, {"a", "c", 1}, {"c", "a", 1}, {"b", "c", 1},
               {"c", "b", 1}});
  CHECK(make_triad(g, 0, 1, 2).triples().size() == 6);
}

TEST_CASE("no cyclic triples") {
  const auto g = digraph({{"a", "b", 1}, {"b", "c", 1}, {"c", "a", 1}});
  const auto t = make_triad(g, 0, 1, 2);
  CHECK(t.type() == TriadType::T030C);
  CHECK(t.triples().empty());
  CHECK_THROWS_AS(transitive_triples(g, t), ContractError);
}

TEST_CASE("enumeration examples") {
  std::vector<std::tuple<std::string, std::string, int>> arcs;
  for (const char* u : {"a", "b", "c", "d"}) {
    for (const char* v : {"a", "b", "c", "d"}) {
      if (std::string(u) != v) arcs.emplace_back(u, v, 1);
    }
  }
  auto triads = enumerate_triads(digraph(arcs));
  CHECK(triads.size() == 4);
  for (const auto& t : triads) CHECK(t.type() == TriadType::T300);

  triads = enumerate_triads(digraph({{"a", "b", 1}, {"a", "c", 1}, {"a", "d", 1}}));
  CHECK(triads.size() == 3);
  for (const auto& t : triads) {
    CHECK(t.type() == TriadType::T021D);
    CHECK(t.triples().empty());
  }
  CHECK(std::is_sorted(triads.begin(), triads.end(),
                       [](const Triad& x, const Triad& y) { return x.nodes() < y.nodes(); }));
}

TEST_CASE("census examples") {
  const SignedDigraph empty({"a", "b", "c", "d", "e"}, {});
  auto c = census(empty);
  CHECK(c[TriadType::T003] == 10);
  CHECK(c.total() == 10);

  const SignedDigraph one({"a", "b", "c"}, {{0, 1, Sign::Positive}, {1, 0, Sign::Negative}});
  c = census(one);
  CHECK(c[TriadType::T102] == 1);
  CHECK(c.total() == 1);

  const auto complete = oracle::random_signed_digraph(9, 1.0, 0.5, 4);
  c = census(complete);
  CHECK(c[TriadType::T300] == choose3(9));
  CHECK(c.total() == choose3(9));
}

TEST_CASE("census modes and worker counts") {
  const auto g = oracle::random_signed_digraph(60, 0.08, 0.3, 12);
  const auto full = census(g, CensusMode::WithNull, 1);
  CHECK(full.total() == choose3(60));
  CHECK(census(g, CensusMode::WithNull, 4) == full);
  const auto connected = census(g, CensusMode::ConnectedOnly, 3);
  CHECK_FALSE(connected.includes_null);
  CHECK(connected[TriadType::T003] == 0);
  CHECK(connected[TriadType::T012] == 0);
  CHECK(connected.total() == enumerate_triads(g).size());
  for (std::size_t i = 3; i < kTriadTypeCount; ++i) CHECK(connected.counts[i] == full.counts[i]);
}

TEST_CASE("choose3") {
  CHECK(choose3(0) == 0);
  CHECK(choose3(2) == 0);
  CHECK(choose3(3) == 1);
  CHECK(choose3(100000) == 166661666700000ULL);
}

}  // TEST_SUITE
