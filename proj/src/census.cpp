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

#include "signbal/census.hpp"

#include <numeric>
#include <string>

#include "signbal/errors.hpp"

namespace signbal {

namespace {

constexpr std::array<std::string_view, kTriadTypeCount> kTriadNames = {
    "003",  "012",  "102",  "021D", "021U", "021C", "111D", "111U",
    "030T", "030C", "201",  "120D", "120U", "120C", "210",  "300"};

// Census class (1-based index into kTriadNames) for each 6-bit arc code.
constexpr std::array<std::uint8_t, 64> kCodeToClass = {
    1, 2,  2,  3,  2,  4,  6,  8,  2,  6,  5,  7,  3,  8,  7,  11,
    2, 6,  4,  8,  5,  9,  9,  13, 6,  10, 9,  14, 7,  14, 12, 15,
    2, 5,  6,  7,  6,  9,  10, 14, 4,  9,  9,  12, 8,  13, 14, 15,
    3, 7,  8,  11, 7,  12, 14, 15, 8,  14, 13, 15, 11, 15, 15, 16};

// Orderings of (a, b, c) tried for transitive triples, lexicographic.
constexpr std::array<std::array<int, 3>, 6> kOrderings = {{
    {0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};

/// Arc lookup within a triad given the three dyad views.
struct LocalArcs {
  std::array<std::array<std::optional<Sign>, 3>, 3> arc{};

  explicit LocalArcs(const detail::TriadView& v) {
    auto load = [&](const Dyad* d, int i, int j) {
      if (!d) return;
      if (d->out) arc[i][j] = d->out_sign;
      if (d->in) arc[j][i] = d->in_sign;
    };
    load(v.ab, 0, 1);
    load(v.ac, 0, 2);
    load(v.bc, 1, 2);
  }
};

std::size_t collect_triples(const detail::TriadView& view,
                            std::array<Triple, 6>& out) {
  const LocalArcs arcs(view);
  const std::array<NodeIndex, 3> nodes = {view.a, view.b, view.c};
  std::size_t count = 0;
  for (const auto& [x, y, z] : kOrderings) {
    const auto& xy = arcs.arc[x][y];
    const auto& yz = arcs.arc[y][z];
    const auto& xz = arcs.arc[x][z];
    if (xy && yz && xz) {
      out[count++] = Triple{nodes[x], nodes[y], nodes[z], {*xy, *yz, *xz}};
    }
  }
  return count;
}

void check_distinct(NodeIndex a, NodeIndex b, NodeIndex c) {
  if (a == b || b == c || a == c) {
    throw ContractError("triad nodes must be distinct");
  }
}

detail::TriadView view_of(const SignedDigraph& graph, NodeIndex a, NodeIndex b,
                          NodeIndex c) {
  for (NodeIndex v : {a, b, c}) {
    if (v >= graph.node_count()) {
      throw LookupError("node index " + std::to_string(v) + " out of range");
    }
  }
  check_distinct(a, b, c);
  std::array<NodeIndex, 3> s = {a, b, c};
  std::sort(s.begin(), s.end());
  return detail::TriadView{s[0],
                           s[1],
                           s[2],
                           detail::find_dyad(graph, s[0], s[1]),
                           detail::find_dyad(graph, s[0], s[2]),
                           detail::find_dyad(graph, s[1], s[2])};
}

}  // namespace

std::string_view to_string(TriadType t) noexcept { return kTriadNames[index_of(t)]; }

std::optional<TriadType> parse_triad_type(std::string_view label) noexcept {
  for (std::size_t i = 0; i < kTriadNames.size(); ++i) {
    if (kTriadNames[i] == label) return kAllTriadTypes[i];
  }
  return std::nullopt;
}

Triad::Triad(std::array<NodeIndex, 3> nodes, TriadType type,
             std::span<const Triple> triples)
    : nodes_(nodes), type_(type) {
  if (triples.size() > triples_.size()) {
    throw ContractError("a triad carries at most six triples");
  }
  std::copy(triples.begin(), triples.end(), triples_.begin());
  triple_count_ = triples.size();
}

namespace detail {

TriadType triad_type_from_code(unsigned code) noexcept {
  return kAllTriadTypes[kCodeToClass[code & 63u] - 1u];
}

const Dyad* find_dyad(const SignedDigraph& graph, NodeIndex u, NodeIndex v) {
  const auto list = graph.dyads(u);
  auto it = std::lower_bound(
      list.begin(), list.end(), v,
      [](const Dyad& d, NodeIndex key) { return d.other < key; });
  if (it == list.end() || it->other != v) return nullptr;
  return &*it;
}

Triad TriadView::materialize() const {
  const TriadType t = type();
  std::array<Triple, 6> triples;
  const std::size_t count = is_transitive(t) ? collect_triples(*this, triples) : 0;
  return Triad({a, b, c}, t, std::span<const Triple>(triples.data(), count));
}

}  // namespace detail

TriadType classify_man(const SignedDigraph& graph, NodeIndex a, NodeIndex b,
                       NodeIndex c) {
  return view_of(graph, a, b, c).type();
}

TriadType classify_man(const SignedDigraph& graph, std::string_view a,
                       std::string_view b, std::string_view c) {
  return classify_man(graph, graph.index_of(a), graph.index_of(b),
                      graph.index_of(c));
}

std::vector<Triple> transitive_triples(const SignedDigraph& graph,
                                       const Triad& triad) {
  if (!is_transitive(triad.type())) {
    throw ContractError("triad of type " + std::string(to_string(triad.type())) +
                        " has no transitive triples");
  }
  const auto& n = triad.nodes();
  const auto view = view_of(graph, n[0], n[1], n[2]);
  if (view.type() != triad.type()) {
    throw ContractError("triad type does not match the graph");
  }
  std::array<Triple, 6> triples;
  const std::size_t count = collect_triples(view, triples);
  return {triples.begin(), triples.begin() + static_cast<std::ptrdiff_t>(count)};
}

Triad make_triad(const SignedDigraph& graph, NodeIndex a, NodeIndex b,
                 NodeIndex c) {
  return view_of(graph, a, b, c).materialize();
}

std::uint64_t CensusTable::total() const {
  return std::accumulate(counts.begin(), counts.end(), std::uint64_t{0});
}

std::uint64_t choose3(std::uint64_t n) noexcept {
  if (n < 3) return 0;
  // n(n-1)/2 is exact; multiply by (n-2)/3 in a divisibility-safe order.
  std::uint64_t a = n, b = n - 1, c = n - 2;
  if (a % 2 == 0) a /= 2; else b /= 2;
  if (a % 3 == 0) a /= 3;
  else if (b % 3 == 0) b /= 3;
  else c /= 3;
  return a * b * c;
}

std::vector<Triad> enumerate_triads(const SignedDigraph& graph) {
  std::vector<Triad> out;
  for_each_triad(graph, [&](const Triad& t) { out.push_back(t); });
  return out;
}

std::array<std::uint64_t, kTriadTypeCount> count_connected_triads(
    const SignedDigraph& graph, unsigned threads) {
  using Counts = std::array<std::uint64_t, kTriadTypeCount>;
  struct Worker {
    Counts counts{};
    detail::PivotScratch scratch;
  };
  const std::size_t n = graph.node_count();
  Worker result = parallel_reduce<Worker>(
      n, threads, [&] { return Worker{Counts{}, detail::PivotScratch(n)}; },
      [&](Worker& w, std::size_t a) {
        detail::visit_connected_triads(
            graph, static_cast<NodeIndex>(a), w.scratch,
            [&](const detail::TriadView& v) { ++w.counts[index_of(v.type())]; });
      },
      [](Worker& into, Worker& from) {
        for (std::size_t i = 0; i < kTriadTypeCount; ++i) into.counts[i] += from.counts[i];
      });
  return result.counts;
}

CensusTable census(const SignedDigraph& graph, CensusMode mode,
                   unsigned threads) {
  CensusTable table;
  table.counts = count_connected_triads(graph, threads);
  table.includes_null = mode == CensusMode::WithNull;
  if (!table.includes_null) return table;

  // Triads with exactly one connected dyad {u, v}: third nodes adjacent to
  // neither endpoint.
  const std::size_t n = graph.node_count();
  struct Worker {
    std::uint64_t asym = 0;
    std::uint64_t mutual = 0;
    std::vector<char> mark;
  };
  Worker single = parallel_reduce<Worker>(
      n, threads, [&] { return Worker{0, 0, std::vector<char>(n, 0)}; },
      [&](Worker& w, std::size_t ui) {
        const auto u = static_cast<NodeIndex>(ui);
        const auto around = graph.dyads(u);
        for (const Dyad& d : around) w.mark[d.other] = 1;
        for (const Dyad& d : around) {
          if (d.other < u) continue;
          const auto other = graph.dyads(d.other);
          std::uint64_t shared = 0;
          for (const Dyad& e : other) shared += static_cast<std::uint64_t>(w.mark[e.other]);
          const std::uint64_t united = around.size() + other.size() - shared;
          const std::uint64_t isolated = n - united;
          (d.mutual() ? w.mutual : w.asym) += isolated;
        }
        for (const Dyad& d : around) w.mark[d.other] = 0;
      },
      [](Worker& into, Worker& from) {
        into.asym += from.asym;
        into.mutual += from.mutual;
      });
  table.counts[index_of(TriadType::T012)] = single.asym;
  table.counts[index_of(TriadType::T102)] = single.mutual;
  const std::uint64_t known = table.total();
  table.counts[index_of(TriadType::T003)] = choose3(n) - known;
  return table;
}

}  // namespace signbal
