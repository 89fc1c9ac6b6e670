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

// Colex-ordered subset search shared by the solvers. Internal header.

#ifndef LEXDOM_SRC_SUBSET_SEARCH_HPP_
#define LEXDOM_SRC_SUBSET_SEARCH_HPP_

#include <cstdint>
#include <vector>

#include "lexdom/bits.hpp"
#include "lexdom/graph.hpp"

namespace lexdom::detail {

// Chosen set plus the vertices with at least one / at least two neighbours in
// it, maintained incrementally.
struct SearchNode {
  Bits chosen = 0;
  Bits ones = 0;
  Bits twos = 0;
};

// Picks subsets of `candidates`. During the search the candidates at
// positions >= pos are decided (in or out); the rest are still open.
class SubsetSpace {
 public:
  SubsetSpace(const Graph& g, Bits candidates) : g_(g), all_(g.all()) {
    for_each_bit(candidates & all_, [&](int v) { cand_.push_back(v); });
    const int m = static_cast<int>(cand_.size());
    open_prefix_.assign(m + 1, 0);
    for (int i = 0; i < m; ++i) open_prefix_[i + 1] = open_prefix_[i] | bit(cand_[i]);
    settled_.assign(m + 1, 0);
    for (int pos = 0; pos <= m; ++pos) {
      Bits s = 0;
      for (int u = 0; u < g.order(); ++u) {
        if ((g.neighbors(u) & open_prefix_[pos]) == 0) s |= bit(u);
      }
      settled_[pos] = s;
    }
  }

  explicit SubsetSpace(const Graph& g) : SubsetSpace(g, g.all()) {}

  const Graph& graph() const { return g_; }
  Bits all() const { return all_; }
  int size() const { return static_cast<int>(cand_.size()); }
  int candidate(int pos) const { return cand_[pos]; }

  SearchNode add(const SearchNode& node, int v) const {
    const Bits nv = g_.neighbors(v);
    return {node.chosen | bit(v), node.ones | nv, node.twos | (node.ones & nv)};
  }

  // Vertices whose membership is final once picks are limited to [0, pos).
  Bits decided(int pos) const { return all_ & ~open_prefix_[pos]; }
  // Vertices (decided or not) whose open neighbourhood is entirely decided,
  // so their neighbour counts are final.
  Bits settled(int pos) const { return settled_[pos]; }
  // Decided vertices with final neighbour counts.
  Bits frozen(int pos) const { return settled_[pos] & decided(pos); }

 private:
  const Graph& g_;
  Bits all_;
  std::vector<int> cand_;
  std::vector<Bits> open_prefix_;
  std::vector<Bits> settled_;
};

// Visits k-subsets of the candidates in colex order, which for a fixed size
// is increasing numeric mask order. The visitor supplies
//   bool prune(const SearchNode&, int pos, int remaining)
//   void leaf(const SearchNode&)
//   bool stop() const
// Returns the number of nodes visited.
template <class Visitor>
std::uint64_t colex_search(const SubsetSpace& space, int k, Visitor& visitor,
                           SearchNode root = {}) {
  std::uint64_t visited = 0;
  if (k < 0 || k > space.size()) return visited;

  auto rec = [&](auto&& self, const SearchNode& node, int limit, int remaining) -> void {
    ++visited;
    if (remaining == 0) {
      visitor.leaf(node);
      return;
    }
    for (int i = remaining - 1; i < limit; ++i) {
      const SearchNode child = space.add(node, space.candidate(i));
      if (visitor.prune(child, i, remaining - 1)) {
        ++visited;
        continue;
      }
      self(self, child, i, remaining - 1);
      if (visitor.stop()) return;
    }
  };
  rec(rec, root, space.size(), k);
  return visited;
}

}  // namespace lexdom::detail

#endif  // LEXDOM_SRC_SUBSET_SEARCH_HPP_
