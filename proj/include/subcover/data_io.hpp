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

// Dataset readers and result files.
//
// Edge lists: one `u v [w]` per line, `#` comments, undirected, weight 1 by
// default, parallel edges summed, self-loops dropped. Tag files: one
// `element tag tag ...` per line. Ids in both are integers and are mapped to
// dense ids in increasing order of the original id. LF or CRLF.

#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <memory>
#include <string>
#include <vector>

#include "subcover/common.hpp"
#include "subcover/set_function.hpp"

namespace subcover {

class ParseError : public InputError {
 public:
  ParseError(std::size_t line, const std::string& message);
  // 1-based; 0 when the error is not tied to a line.
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

struct EdgeListData {
  std::shared_ptr<const GraphCutFunction> graph;
  // original_ids[dense id].
  std::vector<std::int64_t> original_ids;
};

EdgeListData ParseEdgeList(std::istream& in);
EdgeListData ParseEdgeList(const std::filesystem::path& path);
void WriteEdgeList(const EdgeListData& data, std::ostream& out);

struct TagData {
  std::shared_ptr<const CoverageFunction> coverage;
  std::vector<std::int64_t> element_ids;
  std::vector<std::int64_t> tag_ids;
};

// Repeated element lines are merged.
TagData ParseTagAssignments(std::istream& in);
TagData ParseTagAssignments(const std::filesystem::path& path);
void WriteTagAssignments(const TagData& data, std::ostream& out);

// `dense original` per line.
void WriteIdMap(const std::vector<std::int64_t>& original_ids, std::ostream& out);

struct ResultRow {
  std::uint64_t run_id = 0;
  std::string dataset;
  std::string algorithm;
  double eps = 0.0;
  double tau = 0.0;
  double alpha = 0.0;
  double delta = 0.0;
  std::uint64_t seed = 0;
  double f_value = 0.0;
  std::size_t size = 0;
  std::uint64_t queries = 0;
  double wall_ms = 0.0;
  Status status = Status::kSolved;
};

inline constexpr const char* kResultsHeader =
    "run_id,dataset,algorithm,eps,tau,alpha,delta,seed,f_value,size,queries,"
    "wall_ms,status";

// %.6g.
std::string FormatReal(double value);

void WriteResultsCsv(const std::vector<ResultRow>& rows, std::ostream& out);
void WriteResultsCsv(const std::vector<ResultRow>& rows,
                     const std::filesystem::path& path);
std::vector<ResultRow> ReadResultsCsv(std::istream& in);
std::vector<ResultRow> ReadResultsCsv(const std::filesystem::path& path);

}  // namespace subcover
