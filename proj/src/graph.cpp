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

#include "lexdom/graph.hpp"

#include <algorithm>
#include <string>

#include "lexdom/errors.hpp"

namespace lexdom {
namespace {

void check_order(int order) {
  if (order < 0 || order > kMaxVertices) {
    throw CapacityError("vertex count " + std::to_string(order) +
                        " outside supported range 0.." +
                        std::to_string(kMaxVertices));
  }
}

void check_vertex(int order, int v) {
  if (v < 0 || v >= order) {
    throw PreconditionError("vertex " + std::to_string(v) +
                            " out of range for order " + std::to_string(order));
  }
}

void check_same_order(const VertexSet& a, const VertexSet& b) {
  if (a.order() != b.order()) {
    throw PreconditionError("vertex sets over different orders " +
                            std::to_string(a.order()) + " and " +
                            std::to_string(b.order()));
  }
}

}  // namespace

// VertexSet

VertexSet::VertexSet(int order, Bits bits) : order_(order), bits_(bits) {
  check_order(order);
  if ((bits & ~low_mask(order)) != 0) {
    throw PreconditionError("vertex set has members beyond order " +
                            std::to_string(order));
  }
}

VertexSet VertexSet::of(int order, std::initializer_list<int> vertices) {
  return from_vertices(order, std::span<const int>(vertices.begin(), vertices.size()));
}

VertexSet VertexSet::from_vertices(int order, std::span<const int> vertices) {
  check_order(order);
  Bits b = 0;
  for (int v : vertices) {
    check_vertex(order, v);
    b |= bit(v);
  }
  return VertexSet(order, b);
}

bool VertexSet::contains(int v) const {
  return v >= 0 && v < order_ && has_bit(bits_, v);
}

bool VertexSet::is_subset_of(const VertexSet& other) const {
  check_same_order(*this, other);
  return (bits_ & ~other.bits_) == 0;
}

VertexSet VertexSet::with(int v) const {
  check_vertex(order_, v);
  return VertexSet(order_, bits_ | bit(v));
}

VertexSet VertexSet::without(int v) const {
  check_vertex(order_, v);
  return VertexSet(order_, bits_ & ~bit(v));
}

std::vector<int> VertexSet::vertices() const {
  std::vector<int> out;
  out.reserve(size());
  for_each_bit(bits_, [&](int v) { out.push_back(v); });
  return out;
}

VertexSet operator|(const VertexSet& a, const VertexSet& b) {
  check_same_order(a, b);
  return VertexSet(a.order_, a.bits_ | b.bits_);
}

VertexSet operator&(const VertexSet& a, const VertexSet& b) {
  check_same_order(a, b);
  return VertexSet(a.order_, a.bits_ & b.bits_);
}

VertexSet operator-(const VertexSet& a, const VertexSet& b) {
  check_same_order(a, b);
  return VertexSet(a.order_, a.bits_ & ~b.bits_);
}

// Graph

Graph Graph::from_rows(int order, std::vector<Bits> rows) {
  check_order(order);
  if (order < 1) throw PreconditionError("graph must have at least one vertex");
  if (static_cast<int>(rows.size()) != order) {
    throw PreconditionError("expected " + std::to_string(order) +
                            " adjacency rows, got " + std::to_string(rows.size()));
  }
  const Bits all = low_mask(order);
  for (int v = 0; v < order; ++v) {
    if ((rows[v] & ~all) != 0) {
      throw PreconditionError("row " + std::to_string(v) +
                              " has bits beyond the vertex count");
    }
    if (has_bit(rows[v], v)) {
      throw PreconditionError("loop at vertex " + std::to_string(v));
    }
    for_each_bit(rows[v], [&](int u) {
      if (!has_bit(rows[u], v)) {
        throw PreconditionError("asymmetric adjacency between " +
                                std::to_string(v) + " and " + std::to_string(u));
      }
    });
  }
  return Graph(order, std::move(rows));
}

int Graph::edge_count() const {
  int twice = 0;
  for (Bits r : rows_) twice += popcount(r);
  return twice / 2;
}

VertexSet Graph::open_neighborhood(int v) const {
  check_vertex(n_, v);
  return VertexSet(n_, rows_[v]);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (int u = 0; u < n_; ++u) {
    for_each_bit(rows_[u] & ~low_mask(u + 1), [&](int v) { out.emplace_back(u, v); });
  }
  return out;
}

Graph build_graph(int n, const std::vector<Edge>& edges) {
  check_order(n);
  if (n < 1) throw PreconditionError("graph must have at least one vertex");
  std::vector<Bits> rows(n, 0);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    auto [u, v] = edges[i];
    if (u < 0 || u >= n || v < 0 || v >= n) {
      throw PreconditionError("edge " + std::to_string(i) + " (" +
                              std::to_string(u) + "," + std::to_string(v) +
                              ") has an endpoint outside 0.." +
                              std::to_string(n - 1));
    }
    if (u == v) {
      throw PreconditionError("edge " + std::to_string(i) + " is a loop at vertex " +
                              std::to_string(u));
    }
    rows[u] |= bit(v);
    rows[v] |= bit(u);
  }
  return Graph::from_rows(n, std::move(rows));
}

VertexSet closed_neighborhood(const Graph& g, int v) {
  check_vertex(g.order(), v);
  return VertexSet(g.order(), g.closed_neighbors(v));
}

VertexSet epn(const Graph& g, int v, const VertexSet& s) {
  check_vertex(g.order(), v);
  if (s.order() != g.order()) {
    throw PreconditionError("vertex set order does not match graph");
  }
  if (!s.contains(v)) {
    throw PreconditionError("epn requires vertex " + std::to_string(v) +
                            " to belong to the set");
  }
  Bits out = 0;
  for_each_bit(g.neighbors(v) & ~s.bits(), [&](int u) {
    if ((g.neighbors(u) & s.bits()) == bit(v)) out |= bit(u);
  });
  return VertexSet(g.order(), out);
}

DegreeExtremes degree_extremes(const Graph& g) {
  DegreeExtremes d{g.degree(0), g.degree(0)};
  for (int v = 1; v < g.order(); ++v) {
    d.min_degree = std::min(d.min_degree, g.degree(v));
    d.max_degree = std::max(d.max_degree, g.degree(v));
  }
  return d;
}

Bits open_neighborhood_of(const Graph& g, Bits s) {
  Bits out = 0;
  for_each_bit(s, [&](int v) { out |= g.neighbors(v); });
  return out;
}

Bits closed_neighborhood_of(const Graph& g, Bits s) {
  return open_neighborhood_of(g, s) | s;
}

bool is_connected(const Graph& g) {
  Bits seen = bit(0);
  Bits frontier = bit(0);
  while (frontier != 0) {
    Bits next = open_neighborhood_of(g, frontier) & ~seen;
    seen |= next;
    frontier = next;
  }
  return seen == g.all();
}

std::optional<int> first_isolated_vertex(const Graph& g) {
  for (int v = 0; v < g.order(); ++v) {
    if (g.neighbors(v) == 0) return v;
  }
  return std::nullopt;
}

Graph induced_subgraph(const Graph& g, Bits vertices) {
  std::vector<int> keep;
  for_each_bit(vertices & g.all(), [&](int v) { keep.push_back(v); });
  const int k = static_cast<int>(keep.size());
  std::vector<Bits> rows(k, 0);
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      if (g.adjacent(keep[i], keep[j])) rows[i] |= bit(j);
    }
  }
  return Graph::from_rows(k, std::move(rows));
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  const int n = a.order() + b.order();
  check_order(n);
  std::vector<Bits> rows(n, 0);
  for (int v = 0; v < a.order(); ++v) rows[v] = a.neighbors(v);
  for (int v = 0; v < b.order(); ++v) rows[a.order() + v] = b.neighbors(v) << a.order();
  return Graph::from_rows(n, std::move(rows));
}

}  // namespace lexdom
