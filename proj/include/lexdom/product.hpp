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

#ifndef LEXDOM_PRODUCT_HPP_
#define LEXDOM_PRODUCT_HPP_

#include <utility>

#include "lexdom/graph.hpp"
#include "lexdom/vertex_set.hpp"

namespace lexdom {

// Row-major coordinates of G∘H: (u, v) <-> u * nH + v.
class ProductIndexMap {
 public:
  ProductIndexMap(int g_order, int h_order);

  int g_order() const { return g_order_; }
  int h_order() const { return h_order_; }
  int order() const { return g_order_ * h_order_; }

  int encode(int u, int v) const;
  std::pair<int, int> decode(int index) const;

  // Mask of {u} x V(H) without range checks; for hot loops.
  Bits layer_bits(int u) const { return low_mask(h_order_) << (u * h_order_); }

 private:
  int g_order_;
  int h_order_;
};

// The copy H_u = {u} x V(H) inside G∘H.
VertexSet layer_set(const ProductIndexMap& map, int u);

struct LexProduct {
  Graph graph;
  ProductIndexMap map;
};

// (u,v)~(x,y) iff u~x in G, or u = x and v~y in H. Throws CapacityError when
// n(G) n(H) exceeds the vertex capacity.
LexProduct lex_product(const Graph& g, const Graph& h);

}  // namespace lexdom

#endif  // LEXDOM_PRODUCT_HPP_
