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

// Fixed-width vertex bitmasks. Width is 64 by default; configure with
// -DLEXDOM_MAX_VERTICES=128 for two-word rows.

#ifndef LEXDOM_BITS_HPP_
#define LEXDOM_BITS_HPP_

#include <bit>
#include <cstdint>
#include <type_traits>

#ifndef LEXDOM_MAX_VERTICES
#define LEXDOM_MAX_VERTICES 64
#endif

namespace lexdom {

inline constexpr int kMaxVertices = LEXDOM_MAX_VERTICES;
static_assert(kMaxVertices == 64 || kMaxVertices == 128,
              "LEXDOM_MAX_VERTICES must be 64 or 128");

__extension__ typedef unsigned __int128 UInt128;
using Bits = std::conditional_t<kMaxVertices == 64, std::uint64_t, UInt128>;

constexpr Bits bit(int v) { return Bits{1} << v; }

// Bits 0..n-1 set.
constexpr Bits low_mask(int n) {
  return n >= kMaxVertices ? ~Bits{0} : bit(n) - 1;
}

constexpr int popcount(Bits b) {
  if constexpr (kMaxVertices == 64) {
    return std::popcount(b);
  } else {
    return std::popcount(static_cast<std::uint64_t>(b)) +
           std::popcount(static_cast<std::uint64_t>(b >> 64));
  }
}

// Index of the lowest set bit; b must be nonzero.
constexpr int lowest_bit(Bits b) {
  if constexpr (kMaxVertices == 64) {
    return std::countr_zero(b);
  } else {
    auto lo = static_cast<std::uint64_t>(b);
    return lo != 0 ? std::countr_zero(lo)
                   : 64 + std::countr_zero(static_cast<std::uint64_t>(b >> 64));
  }
}

constexpr bool has_bit(Bits b, int v) { return ((b >> v) & 1) != 0; }

// Calls fn(v) for every set bit v in increasing order.
template <class Fn>
constexpr void for_each_bit(Bits b, Fn&& fn) {
  while (b != 0) {
    fn(lowest_bit(b));
    b &= b - 1;
  }
}

}  // namespace lexdom

#endif  // LEXDOM_BITS_HPP_
