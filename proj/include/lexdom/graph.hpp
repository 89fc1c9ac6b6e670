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

#ifndef LEXDOM_GRAPH_HPP_
#define LEXDOM_GRAPH_HPP_

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "lexdom/bits.hpp"
#include "lexdom/vertex_set.hpp"

namespace lexdom {

using Edge = std::pair<int, int>;

// Simple undirected graph on vertices 0..order-1, one adjacency bit row per
// vertex. Immutable after construction; rows are symmetric, loop-free and
// have no bits at positions >= order.
class Graph {
 public:
  // Validates every invariant; throws PreconditionError on violation.
  static Graph from_rows(int order, std::vector<Bits> rows);

  int order() const { return n_; }
  Bits all() const { return low_mask(n_); }
  Bits neighbors(int v) const { return rows_[v]; }
  Bits closed_neighbors(int v) const { return rows_[v] | bit(v); }
  int degree(int v) const { return popcount(rows_[v]); }
  bool adjacent(int u, int v) const { return has_bit(rows_[u], v); }
  int edge_count() const;
  std::span<const Bits> rows() const { return rows_; }

  VertexSet open_neighborhood(int v) const;
  // Edges (u, v) with u < v, sorted.
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.rows_ == b.rows_;
  }

 private:
  Graph(int n, std::vector<Bits> rows) : n_(n), rows_(std::move(rows)) {}

  int n_;
  std::vector<Bits> rows_;
};

// Symmetric closure of `edges`; duplicates collapse. Loops and out-of-range
// endpoints throw PreconditionError naming the offending pair index.
Graph build_graph(int n, const std::vector<Edge>& edges);

VertexSet closed_neighborhood(const Graph& g, int v);

// External private neighbours of v with respect to s: vertices outside s
// whose only neighbour in s is v. Requires v in s.
VertexSet epn(const Graph& g, int v, const VertexSet& s);

struct DegreeExtremes {
  int min_degree;
  int max_degree;
};
DegreeExtremes degree_extremes(const Graph& g);

// N(S) and N[S] as raw masks.
Bits open_neighborhood_of(const Graph& g, Bits s);
Bits closed_neighborhood_of(const Graph& g, Bits s);

bool is_connected(const Graph& g);
std::optional<int> first_isolated_vertex(const Graph& g);

// Subgraph induced by `vertices`, relabelled in increasing index order.
Graph induced_subgraph(const Graph& g, Bits vertices);

Graph disjoint_union(const Graph& a, const Graph& b);

}  // namespace lexdom

#endif  // LEXDOM_GRAPH_HPP_
