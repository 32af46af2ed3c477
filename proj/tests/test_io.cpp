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

#include <sstream>

#include "doctest.h"
#include "signbal/errors.hpp"
#include "signbal/io.hpp"

using namespace signbal;

namespace {

std::vector<EdgeRecord> load(const std::string& text, InputFormat f) {
  std::istringstream in(text);
  return load_edge_records(in, f);
}

}  // namespace

TEST_SUITE("io") {

TEST_CASE("format names round-trip") {
  for (auto f : {InputFormat::CsvRating, InputFormat::TsvSign, InputFormat::SignedMatrix}) {
    CHECK(parse_input_format(to_string(f)) == f);
  }
  CHECK_FALSE(parse_input_format("xlsx").has_value());
}

TEST_CASE("csv rating header row is skipped") {
  const auto r = load("source,target,rating,time\n6,2,4,1289241911\n", InputFormat::CsvRating);
  REQUIRE(r.size() == 1);
  CHECK(r[0].timestamp == 1289241911);
}

TEST_CASE("csv rating records") {
  const auto r = load("1,2,10,100\n2,3,-1\n\n3,1,+2.5,\n", InputFormat::CsvRating);
  REQUIRE(r.size() == 3);
  CHECK(r[0].source == "1");
  CHECK(r[0].weight == 10);
  CHECK(r[0].timestamp == 100);
  CHECK_FALSE(r[1].timestamp.has_value());
  CHECK(r[2].weight == 2.5);
}

TEST_CASE("csv rating errors carry the line") {
  try {
    load("1,2,3\n1,2\n", InputFormat::CsvRating);
    FAIL("no exception");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
  }
  CHECK_THROWS_AS(load("1,2,3\n1,2,x\n", InputFormat::CsvRating), ParseError);
  CHECK_THROWS_AS(load("1,2,3,t\n", InputFormat::CsvRating), ParseError);
}

TEST_CASE("tsv sign") {
  const auto r = load("# comment\na\tb\t+1\r\nb\tc\t-1\n\n% other\n", InputFormat::TsvSign);
  REQUIRE(r.size() == 2);
  CHECK(r[0].weight == 1);
  CHECK(r[1].weight == -1);
  CHECK_THROWS_AS(load("a b 1\n", InputFormat::TsvSign), ParseError);
  CHECK_THROWS_AS(load("a\tb\tpos\n", InputFormat::TsvSign), ParseError);
}

TEST_CASE("signed matrix with and without labels") {
  auto r = load("0 1 -1\n1 0 0\n0 0 0\n", InputFormat::SignedMatrix);
  REQUIRE(r.size() == 3);
  CHECK(r[0].source == "0");
  CHECK(r[0].target == "1");
  CHECK(r[1].weight == -1);

  r = load("x,y\n0,1\n-1,0\n", InputFormat::SignedMatrix);
  REQUIRE(r.size() == 2);
  CHECK(r[1].source == "y");
  CHECK(r[1].weight == -1);

  CHECK_THROWS_AS(load("0 1\n1 0 0\n", InputFormat::SignedMatrix), FormatError);
  CHECK_THROWS_AS(load("a b c\n0 1\n1 0\n", InputFormat::SignedMatrix), FormatError);
  CHECK_THROWS_AS(load("0 1\n1 x\n", InputFormat::SignedMatrix), ParseError);
}

TEST_CASE("missing file") {
  CHECK_THROWS_AS(load_edge_records(std::filesystem::path("/nonexistent/x.tsv"),
                                    InputFormat::TsvSign),
                  IoError);
}

TEST_CASE("tsv dump round-trips") {
  const auto records = load("b\ta\t1\na\tc\t-3\nc\ta\t2\n", InputFormat::TsvSign);
  const auto g = build_graph(records, PreprocessConfig{});
  const std::string dumped = to_tsv(g);
  CHECK(dumped == "a\tc\t-1\nb\ta\t+1\nc\ta\t+1\n");
  const auto again = build_graph(load(dumped, InputFormat::TsvSign), PreprocessConfig{});
  CHECK(again == g);
}

}  // TEST_SUITE
