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

#include "lexdom/roman.hpp"

#include <string>

#include "lexdom/errors.hpp"

namespace lexdom {

RomanAssignment::RomanAssignment(const std::vector<int>& weights)
    : order_(static_cast<int>(weights.size())) {
  if (order_ > kMaxVertices) {
    throw CapacityError("assignment over " + std::to_string(order_) +
                        " vertices exceeds capacity");
  }
  for (int v = 0; v < order_; ++v) {
    switch (weights[v]) {
      case 0: break;
      case 1: v1_ |= bit(v); break;
      case 2: v2_ |= bit(v); break;
      default:
        throw PreconditionError("weight " + std::to_string(weights[v]) +
                                " at vertex " + std::to_string(v) +
                                " is not in {0,1,2}");
    }
  }
}

RomanAssignment RomanAssignment::from_levels(int order, Bits v1, Bits v2) {
  if (order < 0 || order > kMaxVertices) {
    throw CapacityError("assignment order " + std::to_string(order) +
                        " outside supported range");
  }
  if ((v1 & v2) != 0 || ((v1 | v2) & ~low_mask(order)) != 0) {
    throw PreconditionError("levels must be disjoint subsets of the vertex set");
  }
  RomanAssignment f;
  f.order_ = order;
  f.v1_ = v1;
  f.v2_ = v2;
  return f;
}

int RomanAssignment::at(int v) const {
  if (v < 0 || v >= order_) {
    throw PreconditionError("vertex " + std::to_string(v) + " out of range");
  }
  return has_bit(v2_, v) ? 2 : has_bit(v1_, v) ? 1 : 0;
}

Bits RomanAssignment::level_bits(int level) const {
  switch (level) {
    case 0: return low_mask(order_) & ~(v1_ | v2_);
    case 1: return v1_;
    case 2: return v2_;
    default: throw PreconditionError("Roman levels are 0, 1 and 2");
  }
}

std::vector<int> RomanAssignment::weights() const {
  std::vector<int> out(order_);
  for (int v = 0; v < order_; ++v) out[v] = at(v);
  return out;
}

namespace {

void check_order(const Graph& g, const RomanAssignment& f) {
  if (g.order() != f.order()) {
    throw PreconditionError("assignment order " + std::to_string(f.order()) +
                            " does not match graph order " +
                            std::to_string(g.order()));
  }
}

}  // namespace

bool is_roman_dominating(const Graph& g, const RomanAssignment& f) {
  check_order(g, f);
  const Bits v2 = f.level_bits(2);
  bool ok = true;
  for_each_bit(f.level_bits(0), [&](int v) {
    if ((g.neighbors(v) & v2) == 0) ok = false;
  });
  return ok;
}

bool is_perfect_roman_dominating(const Graph& g, const RomanAssignment& f) {
  check_order(g, f);
  const Bits v2 = f.level_bits(2);
  bool ok = true;
  for_each_bit(f.level_bits(0), [&](int v) {
    if (popcount(g.neighbors(v) & v2) != 1) ok = false;
  });
  return ok;
}

bool is_total_roman_dominating(const Graph& g, const RomanAssignment& f) {
  if (!is_roman_dominating(g, f)) return false;
  const Bits positive = f.level_bits(1) | f.level_bits(2);
  for (int v = 0; v < g.order(); ++v) {
    if ((g.neighbors(v) & positive) == 0) return false;
  }
  return true;
}

}  // namespace lexdom
