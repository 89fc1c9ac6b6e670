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

#ifndef LEXDOM_VERTEX_SET_HPP_
#define LEXDOM_VERTEX_SET_HPP_

#include <initializer_list>
#include <span>
#include <vector>

#include "lexdom/bits.hpp"

namespace lexdom {

// A subset of {0..order-1}. Immutable value; bits at positions >= order are
// always zero.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(int order, Bits bits = 0);

  static VertexSet of(int order, std::initializer_list<int> vertices);
  static VertexSet from_vertices(int order, std::span<const int> vertices);
  static VertexSet full(int order) { return VertexSet(order, low_mask(order)); }

  int order() const { return order_; }
  Bits bits() const { return bits_; }
  int size() const { return popcount(bits_); }
  bool empty() const { return bits_ == 0; }
  bool contains(int v) const;
  bool is_subset_of(const VertexSet& other) const;

  VertexSet with(int v) const;
  VertexSet without(int v) const;
  VertexSet complement() const { return VertexSet(order_, ~bits_ & low_mask(order_)); }

  // Members in increasing order.
  std::vector<int> vertices() const;

  friend VertexSet operator|(const VertexSet& a, const VertexSet& b);
  friend VertexSet operator&(const VertexSet& a, const VertexSet& b);
  friend VertexSet operator-(const VertexSet& a, const VertexSet& b);
  friend bool operator==(const VertexSet& a, const VertexSet& b) {
    return a.order_ == b.order_ && a.bits_ == b.bits_;
  }

 private:
  int order_ = 0;
  Bits bits_ = 0;
};

// Numeric comparison of the underlying masks; the canonical witness order.
inline bool mask_less(const VertexSet& a, const VertexSet& b) {
  return a.bits() < b.bits();
}

}  // namespace lexdom

#endif  // LEXDOM_VERTEX_SET_HPP_
