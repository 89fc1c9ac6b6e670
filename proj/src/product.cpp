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

#include "lexdom/product.hpp"

#include <string>

#include "lexdom/errors.hpp"

namespace lexdom {

ProductIndexMap::ProductIndexMap(int g_order, int h_order)
    : g_order_(g_order), h_order_(h_order) {
  if (g_order < 1 || h_order < 1) {
    throw PreconditionError("product factors need at least one vertex");
  }
  if (static_cast<long>(g_order) * h_order > kMaxVertices) {
    throw CapacityError("product order " + std::to_string(g_order) + "*" +
                        std::to_string(h_order) + " exceeds capacity " +
                        std::to_string(kMaxVertices));
  }
}

int ProductIndexMap::encode(int u, int v) const {
  if (u < 0 || u >= g_order_ || v < 0 || v >= h_order_) {
    throw PreconditionError("product coordinate (" + std::to_string(u) + "," +
                            std::to_string(v) + ") out of range");
  }
  return u * h_order_ + v;
}

std::pair<int, int> ProductIndexMap::decode(int index) const {
  if (index < 0 || index >= order()) {
    throw PreconditionError("product index " + std::to_string(index) + " out of range");
  }
  return {index / h_order_, index % h_order_};
}

VertexSet layer_set(const ProductIndexMap& map, int u) {
  if (u < 0 || u >= map.g_order()) {
    throw PreconditionError("layer " + std::to_string(u) + " out of range");
  }
  return VertexSet(map.order(), map.layer_bits(u));
}

LexProduct lex_product(const Graph& g, const Graph& h) {
  ProductIndexMap map(g.order(), h.order());
  const int nh = h.order();
  std::vector<Bits> rows(map.order(), 0);
  for (int u = 0; u < g.order(); ++u) {
    Bits across = 0;
    for_each_bit(g.neighbors(u), [&](int x) { across |= map.layer_bits(x); });
    for (int v = 0; v < nh; ++v) {
      rows[u * nh + v] = across | (h.neighbors(v) << (u * nh));
    }
  }
  return LexProduct{Graph::from_rows(map.order(), std::move(rows)), map};
}

}  // namespace lexdom
