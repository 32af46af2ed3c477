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
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>

namespace signbal {

/// Dense node index assigned at graph build time.
using NodeIndex = std::uint32_t;

enum class Sign : std::int8_t { Negative = -1, Positive = 1 };

constexpr Sign flip(Sign s) noexcept {
  return s == Sign::Positive ? Sign::Negative : Sign::Positive;
}

constexpr int to_int(Sign s) noexcept { return static_cast<int>(s); }

/// The 16 isomorphism classes of the MAN (Mutual, Asymmetric, Null) triad
/// census, in the conventional Holland-Leinhardt order.
enum class TriadType : std::uint8_t {
  T003,
  T012,
  T102,
  T021D,
  T021U,
  T021C,
  T111D,
  T111U,
  T030T,
  T030C,
  T201,
  T120D,
  T120U,
  T120C,
  T210,
  T300,
};

inline constexpr std::size_t kTriadTypeCount = 16;

inline constexpr std::array<TriadType, kTriadTypeCount> kAllTriadTypes = {
    TriadType::T003,  TriadType::T012,  TriadType::T102,  TriadType::T021D,
    TriadType::T021U, TriadType::T021C, TriadType::T111D, TriadType::T111U,
    TriadType::T030T, TriadType::T030C, TriadType::T201,  TriadType::T120D,
    TriadType::T120U, TriadType::T120C, TriadType::T210,  TriadType::T300,
};

/// Triad classes that contain only transitive (non-cyclic) triples.
inline constexpr std::array<TriadType, 4> kTransitiveTypes = {
    TriadType::T030T, TriadType::T120D, TriadType::T120U, TriadType::T300};

constexpr std::size_t index_of(TriadType t) noexcept {
  return static_cast<std::size_t>(t);
}

constexpr bool is_transitive(TriadType t) noexcept {
  return t == TriadType::T030T || t == TriadType::T120D ||
         t == TriadType::T120U || t == TriadType::T300;
}

/// Position of a transitive type inside kTransitiveTypes.
constexpr std::optional<std::size_t> transitive_slot(TriadType t) noexcept {
  switch (t) {
    case TriadType::T030T: return 0;
    case TriadType::T120D: return 1;
    case TriadType::T120U: return 2;
    case TriadType::T300: return 3;
    default: return std::nullopt;
  }
}

/// Number of transitive triples carried by a triad of type `t` (0 for the
/// twelve non-transitive classes).
constexpr std::size_t expected_triple_count(TriadType t) noexcept {
  switch (t) {
    case TriadType::T030T: return 1;
    case TriadType::T120D: return 2;
    case TriadType::T120U: return 2;
    case TriadType::T300: return 6;
    default: return 0;
  }
}

std::string_view to_string(TriadType t) noexcept;
std::optional<TriadType> parse_triad_type(std::string_view label) noexcept;

}  // namespace signbal
