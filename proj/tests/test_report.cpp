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
#include "helpers.hpp"
#include "json.hpp"
#include "signbal/report.hpp"

using namespace signbal;
using testing::digraph;

namespace {

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}

}  // namespace

TEST_SUITE("report") {

TEST_CASE("two decimals") {
  CHECK(report::two_decimals(0.875) == "0.88");
  CHECK(report::two_decimals(1.0) == "1.00");
  CHECK(report::two_decimals(0.0) == "0.00");
}

TEST_CASE("census csv has 16 rows in fixed order") {
  const auto g = digraph({{"a", "b", 1}, {"b", "c", 1}, {"a", "c", 1}, {"c", "d", 1}});
  const auto out = lines(report::census_csv(census(g)));
  REQUIRE(out.size() == 17);
  CHECK(out[0] == "triad_type,count");
  CHECK(out[1] == "003,0");
  CHECK(out[9] == "030T,1");
  CHECK(out[16] == "300,0");
  const auto j = nlohmann::json::parse(report::census_json(census(g)));
  CHECK(j["total"] == 4);
  CHECK(j["counts"]["021D"] == 0);
}

TEST_CASE("balance reports") {
  const auto g = digraph({{"a", "b", 1}, {"b", "c", 1}, {"a", "c", -1}, {"c", "d", 1},
                          {"d", "c", 1}, {"c", "e", 1}, {"e", "c", 1}, {"d", "e", 1},
                          {"e", "d", 1}});
  const auto r = analyze_balance(g, true);
  const auto csv = lines(report::balance_csv(r, BalanceMode::TypeMean));
  REQUIRE(csv.size() == 6);
  CHECK(csv[0] == "type,ratio,count");
  CHECK(csv[1] == "030T,0.00,1");
  CHECK(csv[2] == "120D,,0");
  CHECK(csv[4] == "300,1.00,1");
  CHECK(csv[5] == "average,0.50,2");

  const auto j = nlohmann::json::parse(report::balance_json(r, BalanceMode::TriadMean));
  CHECK(j["balance_mode"] == "triad-mean");
  CHECK(j["per_type"].size() == 4);
  CHECK(j["per_type"][1]["ratio"].is_null());
  CHECK(j["overall_type_mean"] == 0.5);
  CHECK(j["nonpartial"]["balanced"] == 1);
  CHECK(j["classification_counts"]["completely_imbalanced"] == 1);
  CHECK(j["undirected"]["triangles"] == 2);
}

TEST_CASE("json keeps full precision") {
  // 300 with one negative reciprocal pair plus a 030T: type-mean (1/3 + 1)/2.
  const auto g = digraph({{"a", "b", -1}, {"b", "a", 1}, {"a", "c", 1}, {"c", "a", 1},
                          {"b", "c", 1}, {"c", "b", 1}});
  const auto r = analyze_balance(g, false);
  const auto j = nlohmann::json::parse(report::balance_json(r, BalanceMode::TypeMean));
  CHECK(j["overall"].get<double>() == *r.overall_type_mean);
  CHECK(j["undirected"].is_null());
}

TEST_CASE("composition and metrics") {
  const auto g = digraph({{"a", "b", 1}, {"b", "a", 1}, {"a", "c", -1}, {"c", "a", -1},
                          {"b", "c", -1}, {"c", "b", -1}});
  const auto d = composition_directed(g);
  const auto u = composition_undirected(project_undirected(g));
  const auto csv = lines(report::composition_csv("toy", d, u));
  REQUIRE(csv.size() == 3);
  CHECK(csv[0] == "network,basis,ppp,pnn,ppn,nnn,total");
  CHECK(csv[1] == "toy,directed-triples,0.00,1.00,0.00,0.00,6");
  CHECK(csv[2] == "toy,undirected-triangles,0.00,1.00,0.00,0.00,1");

  const auto m = lines(report::metrics_csv(metrics(g)));
  CHECK(m[0] == "measure,value");
  CHECK(m[4] == "transitivity,1.00");
  const auto j = nlohmann::json::parse(report::metrics_json(metrics(g)));
  CHECK(j["path_length_basis"] == "undirected-skeleton");
  CHECK(j["density"] == 1.0);
}

TEST_CASE("compare reports") {
  const auto g = digraph({{"u", "v", 1}, {"v", "u", -1}, {"u", "w", 1}, {"v", "w", 1},
                          {"w", "x", 1}, {"x", "y", 1}, {"y", "w", 1}});
  const auto c = compare_realizations(g, 1);
  const auto csv = lines(report::compare_csv("toy", c, BalanceMode::TypeMean));
  REQUIRE(csv.size() == 2);
  CHECK(csv[0] ==
        "network,partial_br,completely_balanced,partially_balanced,completely_imbalanced,"
        "nonpartial_br,nonpartial_bt,nonpartial_it,undirected_br,undirected_bt,undirected_it");
  CHECK(csv[1] == "toy,0.50,0,1,0,0.00,0,1,1.00,1,0");
  const auto j = nlohmann::json::parse(report::compare_json(c, g, BalanceMode::TypeMean));
  CHECK(j["canceled_pairs"] == nlohmann::json::parse(R"([["u","v"]])"));
  CHECK(j["undirected_only_triangles"] == nlohmann::json::parse(R"([["w","x","y"]])"));
  CHECK(j["directed_only_triads"] == nlohmann::json::parse(R"([["u","v","w"]])"));
  CHECK(j["verdict"] == "directed != undirected");
}

}  // TEST_SUITE
