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

#ifndef LEXDOM_ROMAN_HPP_
#define LEXDOM_ROMAN_HPP_

#include <vector>

#include "lexdom/bits.hpp"
#include "lexdom/graph.hpp"
#include "lexdom/vertex_set.hpp"

namespace lexdom {

// f : V -> {0,1,2}, held as its level sets V1 and V2 (V0 is the rest).
class RomanAssignment {
 public:
  RomanAssignment() = default;
  // Each weight must be 0, 1 or 2.
  explicit RomanAssignment(const std::vector<int>& weights);
  // v1 and v2 must be disjoint subsets of {0..order-1}.
  static RomanAssignment from_levels(int order, Bits v1, Bits v2);

  int order() const { return order_; }
  int at(int v) const;
  Bits level_bits(int level) const;
  VertexSet level(int level) const { return VertexSet(order_, level_bits(level)); }
  // |V1| + 2|V2|.
  int weight() const { return popcount(v1_) + 2 * popcount(v2_); }
  // f(X) for a vertex subset X.
  int weight_of(Bits x) const { return popcount(v1_ & x) + 2 * popcount(v2_ & x); }
  std::vector<int> weights() const;

  friend bool operator==(const RomanAssignment& a, const RomanAssignment& b) {
    return a.order_ == b.order_ && a.v1_ == b.v1_ && a.v2_ == b.v2_;
  }

 private:
  int order_ = 0;
  Bits v1_ = 0;
  Bits v2_ = 0;
};

// Every 0-vertex has a 2-neighbour.
bool is_roman_dominating(const Graph& g, const RomanAssignment& f);
// Every 0-vertex has exactly one 2-neighbour.
bool is_perfect_roman_dominating(const Graph& g, const RomanAssignment& f);
// Roman dominating and V1 u V2 is a total dominating set.
bool is_total_roman_dominating(const Graph& g, const RomanAssignment& f);

}  // namespace lexdom

#endif  // LEXDOM_ROMAN_HPP_
