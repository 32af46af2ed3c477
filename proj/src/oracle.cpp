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

#include "signbal/oracle.hpp"

#include <cmath>
#include <random>
#include <sstream>

#include "signbal/balance.hpp"
#include "signbal/errors.hpp"

namespace signbal::oracle {

namespace {

// Dense arc matrix: 0 = no arc, otherwise the sign.
class ArcMatrix {
 public:
  explicit ArcMatrix(const SignedDigraph& g) : n_(g.node_count()), cells_(n_ * n_, 0) {
    for (const auto& e : g.edges()) cells_[e.source * n_ + e.target] = to_int(e.sign);
  }
  int at(NodeIndex u, NodeIndex v) const { return cells_[u * n_ + v]; }
  bool arc(NodeIndex u, NodeIndex v) const { return at(u, v) != 0; }

  // Undirected relation: agreeing or lone arcs keep their sign, a
  // disagreeing reciprocal pair leaves no edge.
  int undirected(NodeIndex u, NodeIndex v) const {
    const int f = at(u, v);
    const int b = at(v, u);
    if (f == 0) return b;
    if (b == 0) return f;
    return f == b ? f : 0;
  }

 private:
  std::size_t n_;
  std::vector<int> cells_;
};

enum class DyadState { Null, Forward, Backward, Mutual };

DyadState state(const ArcMatrix& m, NodeIndex x, NodeIndex y) {
  const bool f = m.arc(x, y);
  const bool b = m.arc(y, x);
  if (f && b) return DyadState::Mutual;
  if (f) return DyadState::Forward;
  if (b) return DyadState::Backward;
  return DyadState::Null;
}

TriadType classify(const ArcMatrix& m, NodeIndex a, NodeIndex b, NodeIndex c) {
  const NodeIndex v[3] = {a, b, c};
  int mutual = 0;
  int asym = 0;
  int out[3] = {0, 0, 0};  // asymmetric arcs leaving each node
  int in[3] = {0, 0, 0};
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) {
      switch (state(m, v[i], v[j])) {
        case DyadState::Mutual: ++mutual; break;
        case DyadState::Forward: ++asym; ++out[i]; ++in[j]; break;
        case DyadState::Backward: ++asym; ++out[j]; ++in[i]; break;
        case DyadState::Null: break;
      }
    }
  }
  const int null = 3 - mutual - asym;

  // Node incident to the mutual dyad's complement (only meaningful when
  // exactly one dyad is mutual).
  auto outsider = [&]() -> int {
    for (int i = 0; i < 3; ++i) {
      const int j = (i + 1) % 3;
      const int k = (i + 2) % 3;
      if (state(m, v[j], v[k]) == DyadState::Mutual) return i;
    }
    return -1;
  };

  if (mutual == 0 && asym == 0) return TriadType::T003;
  if (mutual == 0 && asym == 1) return TriadType::T012;
  if (mutual == 1 && null == 2) return TriadType::T102;
  if (mutual == 0 && asym == 2) {
    for (int i = 0; i < 3; ++i) {
      if (out[i] == 2) return TriadType::T021D;
      if (in[i] == 2) return TriadType::T021U;
    }
    return TriadType::T021C;
  }
  if (mutual == 1 && asym == 1) {
    const int o = outsider();
    return out[o] == 1 ? TriadType::T111D : TriadType::T111U;
  }
  if (mutual == 0 && asym == 3) {
    for (int i = 0; i < 3; ++i) {
      if (out[i] != 1) return TriadType::T030T;
    }
    return TriadType::T030C;
  }
  if (mutual == 2 && null == 1) return TriadType::T201;
  if (mutual == 1 && asym == 2) {
    const int o = outsider();
    if (out[o] == 2) return TriadType::T120D;
    if (in[o] == 2) return TriadType::T120U;
    return TriadType::T120C;
  }
  if (mutual == 2 && asym == 1) return TriadType::T210;
  return TriadType::T300;
}

bool transitive(TriadType t) {
  return t == TriadType::T030T || t == TriadType::T120D || t == TriadType::T120U ||
         t == TriadType::T300;
}

int type_slot(TriadType t) {
  switch (t) {
    case TriadType::T030T: return 0;
    case TriadType::T120D: return 1;
    case TriadType::T120U: return 2;
    default: return 3;
  }
}

Sign sign_of(int s) { return s < 0 ? Sign::Negative : Sign::Positive; }

}  // namespace

Result brute_force(const SignedDigraph& graph) {
  const std::size_t n = graph.node_count();
  if (n > kMaxNodes) {
    throw LimitError("oracle refuses graphs with more than " +
                     std::to_string(kMaxNodes) + " nodes");
  }
  const ArcMatrix m(graph);
  Result out;
  out.census.includes_null = true;
  out.directed_composition.basis = CompositionBasis::DirectedTriples;
  out.undirected_composition.basis = CompositionBasis::UndirectedTriangles;

  std::array<std::uint64_t, 4> balanced_triples{};
  std::array<std::uint64_t, 4> total_triples{};
  double ratio_sum = 0.0;
  std::uint64_t transitive_triads = 0;

  for (NodeIndex a = 0; a < n; ++a) {
    for (NodeIndex b = a + 1; b < n; ++b) {
      for (NodeIndex c = b + 1; c < n; ++c) {
        const TriadType type = classify(m, a, b, c);
        ++out.census.counts[static_cast<std::size_t>(type)];

        // Undirected triangle.
        const int ab = m.undirected(a, b);
        const int bc = m.undirected(b, c);
        const int ac = m.undirected(a, c);
        if (ab != 0 && bc != 0 && ac != 0) {
          ++out.ratios.triangles;
          if (ab * bc * ac > 0) ++out.ratios.balanced_triangles;
          const int neg = (ab < 0) + (bc < 0) + (ac < 0);
          ++out.undirected_composition.counts[static_cast<std::size_t>(
              composition_from_negatives(neg))];
        }

        const int connected = (m.arc(a, b) || m.arc(b, a)) + (m.arc(b, c) || m.arc(c, b)) +
                              (m.arc(a, c) || m.arc(c, a));
        if (connected < 2) continue;

        std::vector<Triple> triples;
        if (transitive(type)) {
          const NodeIndex orders[6][3] = {{a, b, c}, {a, c, b}, {b, a, c},
                                          {b, c, a}, {c, a, b}, {c, b, a}};
          for (const auto& o : orders) {
            const int s1 = m.at(o[0], o[1]);
            const int s2 = m.at(o[1], o[2]);
            const int s3 = m.at(o[0], o[2]);
            if (s1 == 0 || s2 == 0 || s3 == 0) continue;
            triples.push_back(Triple{o[0], o[1], o[2], {sign_of(s1), sign_of(s2), sign_of(s3)}});
          }
          const int slot = type_slot(type);
          std::uint64_t good = 0;
          for (const auto& t : triples) {
            const int neg = (t.signs[0] == Sign::Negative) + (t.signs[1] == Sign::Negative) +
                            (t.signs[2] == Sign::Negative);
            if (neg % 2 == 0) ++good;
            ++out.directed_composition.counts[static_cast<std::size_t>(
                composition_from_negatives(neg))];
          }
          ++out.ratios.type_triads[slot];
          balanced_triples[slot] += good;
          total_triples[slot] += triples.size();
          ratio_sum += static_cast<double>(good) / static_cast<double>(triples.size());
          ++transitive_triads;
          if (good == triples.size()) {
            ++out.ratios.completely_balanced;
          } else if (good == 0) {
            ++out.ratios.completely_imbalanced;
          } else {
            ++out.ratios.partially_balanced;
          }
        }
        out.triads.emplace_back(std::array<NodeIndex, 3>{a, b, c}, type, triples);
      }
    }
  }

  double type_sum = 0.0;
  int present = 0;
  for (int i = 0; i < 4; ++i) {
    if (total_triples[i] == 0) continue;
    const double r =
        static_cast<double>(balanced_triples[i]) / static_cast<double>(total_triples[i]);
    out.ratios.per_type[i] = r;
    type_sum += r;
    ++present;
  }
  if (present > 0) out.ratios.type_mean = type_sum / present;
  if (transitive_triads > 0) {
    out.ratios.triad_mean = ratio_sum / static_cast<double>(transitive_triads);
    out.ratios.nonpartial = static_cast<double>(out.ratios.completely_balanced) /
                            static_cast<double>(transitive_triads);
  }
  if (out.ratios.triangles > 0) {
    out.ratios.undirected = static_cast<double>(out.ratios.balanced_triangles) /
                            static_cast<double>(out.ratios.triangles);
  }
  return out;
}

SignedDigraph random_signed_digraph(std::size_t n, double edge_prob, double neg_prob,
                                    std::uint64_t seed) {
  if (!(edge_prob >= 0.0 && edge_prob <= 1.0) || !(neg_prob >= 0.0 && neg_prob <= 1.0)) {
    throw ContractError("probabilities must lie in [0, 1]");
  }
  std::mt19937_64 rng(seed);
  auto uniform = [&rng] { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  std::vector<SignedDigraph::Edge> edges;
  for (NodeIndex u = 0; u < n; ++u) {
    for (NodeIndex v = 0; v < n; ++v) {
      if (u == v) continue;
      if (uniform() >= edge_prob) continue;
      const Sign s = uniform() < neg_prob ? Sign::Negative : Sign::Positive;
      edges.push_back({u, v, s});
    }
  }
  return SignedDigraph(std::move(labels), std::move(edges));
}

namespace {

constexpr double kRatioTolerance = 1e-12;

class Mismatches {
 public:
  template <class T>
  void count(const std::string& field, const T& fast, const T& ref) {
    if (fast == ref) return;
    std::ostringstream s;
    s << field << ": fast=" << fast << " oracle=" << ref;
    out_.push_back(s.str());
  }

  void ratio(const std::string& field, const std::optional<double>& fast,
             const std::optional<double>& ref) {
    if (fast.has_value() != ref.has_value()) {
      out_.push_back(field + ": defined in only one implementation");
      return;
    }
    if (fast && std::fabs(*fast - *ref) > kRatioTolerance) {
      std::ostringstream s;
      s.precision(17);
      s << field << ": fast=" << *fast << " oracle=" << *ref;
      out_.push_back(s.str());
    }
  }

  void note(std::string message) { out_.push_back(std::move(message)); }
  std::vector<std::string> take() { return std::move(out_); }

 private:
  std::vector<std::string> out_;
};

}  // namespace

std::vector<std::string> compare_with_fast_path(const SignedDigraph& graph,
                                                unsigned threads) {
  const Result ref = brute_force(graph);
  Mismatches mm;

  const CensusTable fast_census = census(graph, CensusMode::WithNull, threads);
  for (TriadType t : kAllTriadTypes) {
    mm.count("census[" + std::string(to_string(t)) + "]", fast_census[t], ref.census[t]);
  }

  const std::vector<Triad> fast_triads = enumerate_triads(graph);
  mm.count("triad count", fast_triads.size(), ref.triads.size());
  const std::size_t shared = std::min(fast_triads.size(), ref.triads.size());
  for (std::size_t i = 0; i < shared; ++i) {
    if (fast_triads[i] == ref.triads[i]) continue;
    const auto& nodes = ref.triads[i].nodes();
    std::ostringstream s;
    s << "triad #" << i << " (oracle nodes " << nodes[0] << "," << nodes[1] << ","
      << nodes[2] << ") differs";
    mm.note(s.str());
  }

  const BalanceReport fast = analyze_balance(graph, true, threads);
  for (std::size_t i = 0; i < 4; ++i) {
    const std::string type(to_string(kTransitiveTypes[i]));
    mm.count("triads[" + type + "]", fast.per_type[i].triad_count, ref.ratios.type_triads[i]);
    mm.ratio("ratio[" + type + "]", fast.per_type[i].ratio, ref.ratios.per_type[i]);
  }
  mm.ratio("type_mean", fast.overall_type_mean, ref.ratios.type_mean);
  mm.ratio("triad_mean", fast.overall_triad_mean, ref.ratios.triad_mean);
  mm.ratio("nonpartial", fast.nonpartial ? std::optional(fast.nonpartial->ratio) : std::nullopt,
           ref.ratios.nonpartial);
  mm.count("completely_balanced", fast.counts.completely_balanced,
           ref.ratios.completely_balanced);
  mm.count("partially_balanced", fast.counts.partially_balanced,
           ref.ratios.partially_balanced);
  mm.count("completely_imbalanced", fast.counts.completely_imbalanced,
           ref.ratios.completely_imbalanced);
  mm.count("triangles", fast.undirected->triangles, ref.ratios.triangles);
  mm.count("balanced_triangles", fast.undirected->balanced, ref.ratios.balanced_triangles);
  mm.ratio("undirected", fast.undirected->ratio, ref.ratios.undirected);

  const CompositionTable fast_directed = composition_directed(graph, threads);
  const CompositionTable fast_undirected = composition_undirected(project_undirected(graph));
  for (Composition c : kCompositions) {
    const std::string key(key_of(c));
    mm.count("directed_composition[" + key + "]", fast_directed.count(c),
             ref.directed_composition.count(c));
    mm.count("undirected_composition[" + key + "]", fast_undirected.count(c),
             ref.undirected_composition.count(c));
  }
  return mm.take();
}

}  // namespace signbal::oracle
