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

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "signbal/graph.hpp"

namespace signbal {

enum class InputFormat {
  CsvRating,     // source,target,rating[,time]
  TsvSign,       // source<TAB>target<TAB>sign
  SignedMatrix,  // square integer matrix, rows are senders
};

std::optional<InputFormat> parse_input_format(std::string_view name) noexcept;
std::string_view to_string(InputFormat format) noexcept;

/// Parses edge records. Malformed lines raise ParseError (with 1-based line
/// number); a non-square matrix raises FormatError.
std::vector<EdgeRecord> load_edge_records(std::istream& in, InputFormat format);

/// File variant; raises IoError when the file cannot be opened.
std::vector<EdgeRecord> load_edge_records(const std::filesystem::path& path,
                                          InputFormat format);

/// Canonical dump: "source\ttarget\t+1|-1\n" per arc in index order.
void write_tsv(std::ostream& out, const SignedDigraph& graph);
std::string to_tsv(const SignedDigraph& graph);

}  // namespace signbal
