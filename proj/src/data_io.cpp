// Copyright 2026 The Authors.
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

#include "subcover/data_io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <unordered_map>

namespace subcover {

ParseError::ParseError(std::size_t line, const std::string& message)
    : InputError(line > 0 ? "line " + std::to_string(line) + ": " + message
                          : message),
      line_(line) {}

namespace {

std::ifstream OpenInput(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path.string());
  return in;
}

// Splits on blanks. Returns false for blank and comment lines.
bool Tokenize(std::string& line, std::vector<std::string_view>& tokens) {
  if (!line.empty() && line.back() == '\r') line.pop_back();
  tokens.clear();
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
    if (j > i) tokens.emplace_back(line.data() + i, j - i);
    i = j;
  }
  return !tokens.empty() && tokens.front().front() != '#';
}

std::int64_t ParseId(std::string_view token, std::size_t line) {
  std::int64_t id = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), id);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw ParseError(line, "expected an integer id, got '" + std::string(token) + "'");
  }
  return id;
}

double ParseWeight(std::string_view token, std::size_t line) {
  const std::string text(token);
  char* end = nullptr;
  const double w = std::strtod(text.c_str(), &end);
  if (end != text.c_str() + text.size() || !std::isfinite(w) || w < 0.0) {
    throw ParseError(line, "expected a finite weight >= 0, got '" + text + "'");
  }
  return w;
}

// Dense ids in increasing order of the original ids.
std::vector<std::int64_t> SortedUnique(std::vector<std::int64_t> ids) {
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  return ids;
}

std::uint32_t DenseId(const std::vector<std::int64_t>& sorted, std::int64_t id) {
  return static_cast<std::uint32_t>(
      std::lower_bound(sorted.begin(), sorted.end(), id) - sorted.begin());
}

std::string FullPrecision(double value) {
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "%.17g", value);
  return buffer;
}

}  // namespace

EdgeListData ParseEdgeList(std::istream& in) {
  struct RawEdge {
    std::int64_t u, v;
    double w;
  };
  std::vector<RawEdge> raw;
  std::vector<std::int64_t> ids;
  std::string line;
  std::vector<std::string_view> tokens;
  for (std::size_t number = 1; std::getline(in, line); ++number) {
    if (!Tokenize(line, tokens)) continue;
    if (tokens.size() < 2 || tokens.size() > 3) {
      throw ParseError(number, "expected 'u v [w]'");
    }
    const std::int64_t u = ParseId(tokens[0], number);
    const std::int64_t v = ParseId(tokens[1], number);
    const double w = tokens.size() == 3 ? ParseWeight(tokens[2], number) : 1.0;
    if (u == v) continue;
    raw.push_back({u, v, w});
    ids.push_back(u);
    ids.push_back(v);
  }
  EdgeListData data;
  data.original_ids = SortedUnique(std::move(ids));
  std::vector<WeightedEdge> edges;
  edges.reserve(raw.size());
  for (const RawEdge& e : raw) {
    edges.push_back({DenseId(data.original_ids, e.u),
                     DenseId(data.original_ids, e.v), e.w});
  }
  data.graph =
      std::make_shared<GraphCutFunction>(data.original_ids.size(), edges);
  return data;
}

EdgeListData ParseEdgeList(const std::filesystem::path& path) {
  std::ifstream in = OpenInput(path);
  return ParseEdgeList(in);
}

void WriteEdgeList(const EdgeListData& data, std::ostream& out) {
  out << "# undirected edge list: u v weight\n";
  for (const WeightedEdge& e : data.graph->Edges()) {
    out << data.original_ids[e.u] << ' ' << data.original_ids[e.v] << ' '
        << FullPrecision(e.weight) << '\n';
  }
}

TagData ParseTagAssignments(std::istream& in) {
  std::map<std::int64_t, std::vector<std::int64_t>> raw;
  std::vector<std::int64_t> tag_ids;
  std::string line;
  std::vector<std::string_view> tokens;
  for (std::size_t number = 1; std::getline(in, line); ++number) {
    if (!Tokenize(line, tokens)) continue;
    auto& tags = raw[ParseId(tokens[0], number)];
    for (std::size_t i = 1; i < tokens.size(); ++i) {
      tags.push_back(ParseId(tokens[i], number));
      tag_ids.push_back(tags.back());
    }
  }
  TagData data;
  data.tag_ids = SortedUnique(std::move(tag_ids));
  std::vector<std::vector<std::uint32_t>> tags;
  tags.reserve(raw.size());
  for (const auto& [element, originals] : raw) {
    data.element_ids.push_back(element);
    std::vector<std::uint32_t> dense;
    dense.reserve(originals.size());
    for (std::int64_t t : originals) dense.push_back(DenseId(data.tag_ids, t));
    std::sort(dense.begin(), dense.end());
    dense.erase(std::unique(dense.begin(), dense.end()), dense.end());
    tags.push_back(std::move(dense));
  }
  data.coverage =
      std::make_shared<CoverageFunction>(std::move(tags), data.tag_ids.size());
  return data;
}

TagData ParseTagAssignments(const std::filesystem::path& path) {
  std::ifstream in = OpenInput(path);
  return ParseTagAssignments(in);
}

void WriteTagAssignments(const TagData& data, std::ostream& out) {
  out << "# element tag tag ...\n";
  for (ElementId x = 0; x < data.coverage->ground_size(); ++x) {
    out << data.element_ids[x];
    for (std::uint32_t t : data.coverage->tags_of(x)) out << ' ' << data.tag_ids[t];
    out << '\n';
  }
}

void WriteIdMap(const std::vector<std::int64_t>& original_ids, std::ostream& out) {
  out << "# dense original\n";
  for (std::size_t i = 0; i < original_ids.size(); ++i) {
    out << i << ' ' << original_ids[i] << '\n';
  }
}

std::string FormatReal(double value) {
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "%.6g", value);
  return buffer;
}

namespace {

std::string QuoteField(const std::string& text) {
  if (text.find_first_of(",\"\n\r") == std::string::npos) return text;
  std::string quoted = "\"";
  for (char c : text) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + '"';
}

std::vector<std::string> SplitCsv(const std::string& line, std::size_t number) {
  std::vector<std::string> fields(1);
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        fields.back() += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        fields.back() += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.emplace_back();
    } else {
      fields.back() += c;
    }
  }
  if (quoted) throw ParseError(number, "unterminated quoted field");
  return fields;
}

template <typename T>
T ParseUnsigned(const std::string& text, std::size_t number) {
  T value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw ParseError(number, "expected an unsigned integer, got '" + text + "'");
  }
  return value;
}

double ParseReal(const std::string& text, std::size_t number) {
  char* end = nullptr;
  const double value = std::strtod(text.c_str(), &end);
  if (text.empty() || end != text.c_str() + text.size()) {
    throw ParseError(number, "expected a number, got '" + text + "'");
  }
  return value;
}

}  // namespace

void WriteResultsCsv(const std::vector<ResultRow>& rows, std::ostream& out) {
  out << kResultsHeader << '\n';
  for (const ResultRow& r : rows) {
    out << r.run_id << ',' << QuoteField(r.dataset) << ','
        << QuoteField(r.algorithm) << ',' << FormatReal(r.eps) << ','
        << FormatReal(r.tau) << ',' << FormatReal(r.alpha) << ','
        << FormatReal(r.delta) << ',' << r.seed << ',' << FormatReal(r.f_value)
        << ',' << r.size << ',' << r.queries << ',' << FormatReal(r.wall_ms)
        << ',' << ToString(r.status) << '\n';
  }
}

void WriteResultsCsv(const std::vector<ResultRow>& rows,
                     const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path.string());
  WriteResultsCsv(rows, out);
  if (!out) throw InputError("write failed: " + path.string());
}

std::vector<ResultRow> ReadResultsCsv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw ParseError(1, "missing header");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != kResultsHeader) throw ParseError(1, "unexpected header");
  std::vector<ResultRow> rows;
  for (std::size_t number = 2; std::getline(in, line); ++number) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto f = SplitCsv(line, number);
    if (f.size() != 13) throw ParseError(number, "expected 13 fields");
    ResultRow r;
    r.run_id = ParseUnsigned<std::uint64_t>(f[0], number);
    r.dataset = f[1];
    r.algorithm = f[2];
    r.eps = ParseReal(f[3], number);
    r.tau = ParseReal(f[4], number);
    r.alpha = ParseReal(f[5], number);
    r.delta = ParseReal(f[6], number);
    r.seed = ParseUnsigned<std::uint64_t>(f[7], number);
    r.f_value = ParseReal(f[8], number);
    r.size = ParseUnsigned<std::size_t>(f[9], number);
    r.queries = ParseUnsigned<std::uint64_t>(f[10], number);
    r.wall_ms = ParseReal(f[11], number);
    try {
      r.status = StatusFromString(f[12]);
    } catch (const InputError& e) {
      throw ParseError(number, e.what());
    }
    rows.push_back(std::move(r));
  }
  return rows;
}

std::vector<ResultRow> ReadResultsCsv(const std::filesystem::path& path) {
  std::ifstream in = OpenInput(path);
  return ReadResultsCsv(in);
}

}  // namespace subcover
