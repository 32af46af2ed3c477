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

#include "signbal/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "signbal/errors.hpp"

namespace signbal {

std::optional<InputFormat> parse_input_format(std::string_view name) noexcept {
  if (name == "csv-rating") return InputFormat::CsvRating;
  if (name == "tsv-sign") return InputFormat::TsvSign;
  if (name == "signed-matrix") return InputFormat::SignedMatrix;
  return std::nullopt;
}

std::string_view to_string(InputFormat format) noexcept {
  switch (format) {
    case InputFormat::CsvRating: return "csv-rating";
    case InputFormat::TsvSign: return "tsv-sign";
    case InputFormat::SignedMatrix: return "signed-matrix";
  }
  return "unknown";
}

namespace {

std::string_view trim(std::string_view s) noexcept {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    out.push_back(s.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == ',' ||
                            s[i] == '\r')) {
      ++i;
    }
    const std::size_t start = i;
    while (i < s.size() && s[i] != ' ' && s[i] != '\t' && s[i] != ',' &&
           s[i] != '\r') {
      ++i;
    }
    if (i > start) out.push_back(s.substr(start, i - start));
  }
  return out;
}

std::optional<double> parse_real(std::string_view s) noexcept {
  s = trim(s);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size() ||
      !std::isfinite(value)) {
    return std::nullopt;
  }
  return value;
}

template <class Int>
std::optional<Int> parse_integer(std::string_view s) noexcept {
  s = trim(s);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  Int value = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
    return std::nullopt;
  }
  return value;
}

bool is_comment_or_blank(std::string_view line) noexcept {
  const auto t = trim(line);
  return t.empty() || t.front() == '#' || t.front() == '%';
}

std::vector<EdgeRecord> load_csv_rating(std::istream& in) {
  std::vector<EdgeRecord> records;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (trim(line).empty()) continue;
    const auto fields = split(line, ',');
    if (fields.size() != 3 && fields.size() != 4) {
      throw ParseError(lineno, "expected source,target,rating[,time]");
    }
    const auto weight = parse_real(fields[2]);
    if (!weight) {
      if (lineno == 1) continue;  // header row
      throw ParseError(lineno, "rating is not a finite number");
    }
    EdgeRecord r{std::string(trim(fields[0])), std::string(trim(fields[1])),
                 *weight, std::nullopt};
    if (r.source.empty() || r.target.empty()) {
      throw ParseError(lineno, "empty node id");
    }
    if (fields.size() == 4 && !trim(fields[3]).empty()) {
      r.timestamp = parse_integer<std::int64_t>(fields[3]);
      if (!r.timestamp) throw ParseError(lineno, "timestamp is not an integer");
    }
    records.push_back(std::move(r));
  }
  return records;
}

std::vector<EdgeRecord> load_tsv_sign(std::istream& in) {
  std::vector<EdgeRecord> records;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (is_comment_or_blank(line)) continue;
    std::string_view view = line;
    if (!view.empty() && view.back() == '\r') view.remove_suffix(1);
    const auto fields = split(view, '\t');
    if (fields.size() != 3) {
      throw ParseError(lineno, "expected source<TAB>target<TAB>sign");
    }
    const auto weight = parse_real(fields[2]);
    if (!weight) throw ParseError(lineno, "sign is not a number");
    EdgeRecord r{std::string(fields[0]), std::string(fields[1]), *weight,
                 std::nullopt};
    if (r.source.empty() || r.target.empty()) {
      throw ParseError(lineno, "empty node id");
    }
    records.push_back(std::move(r));
  }
  return records;
}

std::vector<EdgeRecord> load_signed_matrix(std::istream& in) {
  std::vector<std::vector<long long>> rows;
  std::vector<std::size_t> row_lines;
  std::vector<std::string> labels;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (is_comment_or_blank(line)) continue;
    const auto tokens = split_ws(line);
    std::vector<long long> row;
    row.reserve(tokens.size());
    bool numeric = true;
    for (auto tok : tokens) {
      const auto v = parse_integer<long long>(tok);
      if (!v) {
        numeric = false;
        break;
      }
      row.push_back(*v);
    }
    if (!numeric) {
      if (rows.empty() && labels.empty()) {
        for (auto tok : tokens) labels.emplace_back(tok);
        continue;
      }
      throw ParseError(lineno, "matrix cell is not an integer");
    }
    rows.push_back(std::move(row));
    row_lines.push_back(lineno);
  }

  const std::size_t n = rows.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != n) {
      throw FormatError("matrix is not square: row " + std::to_string(i + 1) +
                        " (line " + std::to_string(row_lines[i]) + ") has " +
                        std::to_string(rows[i].size()) + " cells, expected " +
                        std::to_string(n));
    }
  }
  if (!labels.empty() && labels.size() != n) {
    throw FormatError("label header has " + std::to_string(labels.size()) +
                      " entries for a " + std::to_string(n) + "x" +
                      std::to_string(n) + " matrix");
  }
  if (labels.empty()) {
    for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  }

  std::vector<EdgeRecord> records;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (rows[i][j] != 0) {
        records.push_back(EdgeRecord{labels[i], labels[j],
                                     static_cast<double>(rows[i][j]),
                                     std::nullopt});
      }
    }
  }
  return records;
}

}  // namespace

std::vector<EdgeRecord> load_edge_records(std::istream& in,
                                          InputFormat format) {
  switch (format) {
    case InputFormat::CsvRating: return load_csv_rating(in);
    case InputFormat::TsvSign: return load_tsv_sign(in);
    case InputFormat::SignedMatrix: return load_signed_matrix(in);
  }
  throw FormatError("unknown input format");
}

std::vector<EdgeRecord> load_edge_records(const std::filesystem::path& path,
                                          InputFormat format) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open input file '" + path.string() + "'");
  return load_edge_records(in, format);
}

void write_tsv(std::ostream& out, const SignedDigraph& graph) {
  for (const auto& e : graph.edges()) {
    const auto& s = graph.label(e.source);
    const auto& t = graph.label(e.target);
    if (s.find_first_of("\t\n") != std::string::npos ||
        t.find_first_of("\t\n") != std::string::npos) {
      throw FormatError("node id contains a tab or newline and cannot be dumped");
    }
    out << s << '\t' << t << '\t' << (e.sign == Sign::Positive ? "+1" : "-1")
        << '\n';
  }
}

std::string to_tsv(const SignedDigraph& graph) {
  std::ostringstream out;
  write_tsv(out, graph);
  return out.str();
}

}  // namespace signbal
