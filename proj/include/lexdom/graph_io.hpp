// Copyright 2026 The lexdom Authors
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

// Text formats and graph families.
//
//  * graph6 (short form): one size byte for n <= 62, otherwise 126 followed
//    by three 6-bit size bytes. The payload lists the upper triangle column
//    by column, (0,1),(0,2),(1,2),(0,3),..., six bits per byte offset by 63,
//    zero-padded. An optional ">>graph6<<" header is accepted.
//  * edge list: a header line "n m" followed by m lines "u v" (0-based).

#ifndef LEXDOM_GRAPH_IO_HPP_
#define LEXDOM_GRAPH_IO_HPP_

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "lexdom/graph.hpp"

namespace lexdom {

Graph parse_graph6(std::string_view text);
std::string write_graph6(const Graph& g);

Graph parse_edge_list(std::string_view text);
std::string write_edge_list(const Graph& g);

// Edge list when the first line holds whitespace-separated fields, graph6
// otherwise.
Graph parse_graph(std::string_view text);

// Newline-separated graph6 lines; blank lines are ignored. A malformed line
// throws ParseError carrying its 1-based line number.
std::vector<Graph> parse_corpus(std::string_view text);
std::vector<Graph> load_corpus(const std::filesystem::path& path);

struct GraphFamilySpec {
  enum class Family { kPath, kCycle, kComplete, kEmpty, kStar, kUnion, kCorona };

  Family family;
  // path/cycle/complete/empty: {order}; star: {leaves}; corona: {k}.
  std::vector<int> params;
  // union: two operands; corona: the base graph.
  std::vector<GraphFamilySpec> parts;
};

// Parses e.g. "path(4)", "union(complete(2),empty(1))", "corona(cycle(3),2)".
GraphFamilySpec parse_family_spec(std::string_view text);
std::string to_string(const GraphFamilySpec& spec);

// corona(G', k) puts G' on vertices 0..n'-1 and gives base vertex v the
// pendants n' + v*k .. n' + v*k + k-1. star(k) has centre 0.
Graph generate(const GraphFamilySpec& spec);

}  // namespace lexdom

#endif  // LEXDOM_GRAPH_IO_HPP_
