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

// Reference implementations by plain enumeration over all subsets or all
// {0,1,2}-assignments, written directly from the definitions. They only use
// Graph::order() and Graph::adjacent(), never the library's bit tricks, so a
// shared bug would have to be made twice.

#ifndef LEXDOM_TESTS_ORACLE_HPP_
#define LEXDOM_TESTS_ORACLE_HPP_

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <utility>
#include <vector>

#include "lexdom/graph.hpp"

namespace oracle {

using lexdom::Graph;

inline std::vector<std::vector<int>> adjacency(const Graph& g) {
  std::vector<std::vector<int>> adj(g.order());
  for (int u = 0; u < g.order(); ++u) {
    for (int v = 0; v < g.order(); ++v) {
      if (u != v && g.adjacent(u, v)) adj[u].push_back(v);
    }
  }
  return adj;
}

inline bool in(std::uint64_t mask, int v) { return (mask >> v) & 1U; }

inline int count_in(const std::vector<int>& vs, std::uint64_t mask) {
  int c = 0;
  for (int v : vs) c += in(mask, v) ? 1 : 0;
  return c;
}

inline bool dominating(const std::vector<std::vector<int>>& adj, std::uint64_t s) {
  for (int v = 0; v < static_cast<int>(adj.size()); ++v) {
    if (!in(s, v) && count_in(adj[v], s) == 0) return false;
  }
  return true;
}

inline bool total_dominating(const std::vector<std::vector<int>>& adj, std::uint64_t s) {
  for (const auto& nv : adj) {
    if (count_in(nv, s) == 0) return false;
  }
  return true;
}

inline bool perfect_dominating(const std::vector<std::vector<int>>& adj, std::uint64_t s) {
  for (int v = 0; v < static_cast<int>(adj.size()); ++v) {
    if (!in(s, v) && count_in(adj[v], s) != 1) return false;
  }
  return true;
}

// N[u] and N[v] disjoint for all distinct u, v in s.
inline bool packing(const std::vector<std::vector<int>>& adj, std::uint64_t s) {
  const int n = static_cast<int>(adj.size());
  for (int w = 0; w < n; ++w) {
    const int closed = count_in(adj[w], s) + (in(s, w) ? 1 : 0);
    if (closed > 1) return false;
  }
  return true;
}

// N(u) and N(v) disjoint for all distinct u, v in s.
inline bool open_packing(const std::vector<std::vector<int>>& adj, std::uint64_t s) {
  for (const auto& nw : adj) {
    if (count_in(nw, s) > 1) return false;
  }
  return true;
}

enum class SetKind { kGamma, kGammaT, kGammaP, kRho, kRhoO };

// Minimum (or maximum for packings) size over all 2^n subsets.
inline int set_parameter(const Graph& g, SetKind kind) {
  const auto adj = adjacency(g);
  const int n = g.order();
  const bool maximize = kind == SetKind::kRho || kind == SetKind::kRhoO;
  int best = maximize ? -1 : std::numeric_limits<int>::max();
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
    bool ok = false;
    switch (kind) {
      case SetKind::kGamma: ok = dominating(adj, s); break;
      case SetKind::kGammaT: ok = total_dominating(adj, s); break;
      case SetKind::kGammaP: ok = perfect_dominating(adj, s); break;
      case SetKind::kRho: ok = packing(adj, s); break;
      case SetKind::kRhoO: ok = open_packing(adj, s); break;
    }
    if (!ok) continue;
    const int size = __builtin_popcountll(s);
    best = maximize ? std::max(best, size) : std::min(best, size);
  }
  return best;
}

enum class RomanKind { kRoman, kPerfect, kTotal };

inline bool roman_ok(const std::vector<std::vector<int>>& adj, const std::vector<int>& f,
                     RomanKind kind) {
  const int n = static_cast<int>(adj.size());
  for (int v = 0; v < n; ++v) {
    int twos = 0;
    int positive = 0;
    for (int u : adj[v]) {
      twos += f[u] == 2 ? 1 : 0;
      positive += f[u] > 0 ? 1 : 0;
    }
    if (f[v] == 0) {
      if (kind == RomanKind::kPerfect ? twos != 1 : twos == 0) return false;
    }
    if (kind == RomanKind::kTotal && positive == 0) return false;
  }
  return true;
}

// Calls visit(f, weight) for every feasible assignment, in base-3 order.
inline void for_each_roman(const Graph& g, RomanKind kind,
                           const std::function<void(const std::vector<int>&, int)>& visit) {
  const auto adj = adjacency(g);
  const int n = g.order();
  std::vector<int> f(n, 0);
  while (true) {
    if (roman_ok(adj, f, kind)) {
      int w = 0;
      for (int x : f) w += x;
      visit(f, w);
    }
    int i = 0;
    while (i < n && f[i] == 2) f[i++] = 0;
    if (i == n) break;
    ++f[i];
  }
}

inline int roman_parameter(const Graph& g, RomanKind kind) {
  int best = std::numeric_limits<int>::max();
  for_each_roman(g, kind, [&](const std::vector<int>&, int w) { best = std::min(best, w); });
  return best;
}

// {gamma_R, gamma_Rp, gamma_tR} in one pass over the 3^n assignments;
// gamma_tR is -1 when g has an isolated vertex.
inline std::array<int, 3> roman_parameters(const Graph& g) {
  const auto adj = adjacency(g);
  const int n = g.order();
  constexpr int kNone = std::numeric_limits<int>::max();
  std::array<int, 3> best{kNone, kNone, kNone};
  std::vector<int> f(n, 0);
  int w = 0;
  while (true) {
    if (w < best[0] && roman_ok(adj, f, RomanKind::kRoman)) best[0] = w;
    if (w < best[1] && roman_ok(adj, f, RomanKind::kPerfect)) best[1] = w;
    if (w < best[2] && roman_ok(adj, f, RomanKind::kTotal)) best[2] = w;
    int i = 0;
    while (i < n && f[i] == 2) {
      f[i++] = 0;
      w -= 2;
    }
    if (i == n) break;
    ++f[i];
    ++w;
  }
  if (best[2] == kNone) best[2] = -1;
  return best;
}

// V2 masks of all optimal functions, sorted.
inline std::vector<std::uint64_t> optimal_v2(const Graph& g, RomanKind kind) {
  const int value = roman_parameter(g, kind);
  std::vector<std::uint64_t> out;
  for_each_roman(g, kind, [&](const std::vector<int>& f, int w) {
    if (w != value) return;
    std::uint64_t v2 = 0;
    for (int v = 0; v < static_cast<int>(f.size()); ++v) {
      if (f[v] == 2) v2 |= std::uint64_t{1} << v;
    }
    out.push_back(v2);
  });
  std::sort(out.begin(), out.end());
  return out;
}

// min 2|A| + 3|B| over dominating couples (A, B).
inline int zeta(const Graph& g) {
  const auto adj = adjacency(g);
  const int n = g.order();
  int best = std::numeric_limits<int>::max();
  std::vector<int> side(n, 0);  // 0 none, 1 in A, 2 in B
  while (true) {
    std::uint64_t ab = 0;
    int w = 0;
    for (int v = 0; v < n; ++v) {
      if (side[v] != 0) ab |= std::uint64_t{1} << v;
      w += side[v] == 1 ? 2 : side[v] == 2 ? 3 : 0;
    }
    bool ok = true;
    for (int v = 0; v < n && ok; ++v) {
      if (side[v] != 2 && count_in(adj[v], ab) == 0) ok = false;
    }
    if (ok) best = std::min(best, w);
    int i = 0;
    while (i < n && side[i] == 2) side[i++] = 0;
    if (i == n) break;
    ++side[i];
  }
  return best;
}

// min 4|S0| + 2|S1| over dominating open packings.
inline std::optional<int> zeta_prime(const Graph& g) {
  const auto adj = adjacency(g);
  const int n = g.order();
  std::optional<int> best;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
    if (!open_packing(adj, s) || !dominating(adj, s)) continue;
    int w = 0;
    for (int v = 0; v < n; ++v) {
      if (in(s, v)) w += count_in(adj[v], s) == 0 ? 4 : 2;
    }
    if (!best || w < *best) best = w;
  }
  return best;
}

// (u,v)(x,y) adjacent iff ux in E(G), or u = x and vy in E(H).
inline bool lex_adjacent(const Graph& g, const Graph& h, int a, int b) {
  const int u = a / h.order();
  const int v = a % h.order();
  const int x = b / h.order();
  const int y = b % h.order();
  if (u != x) return g.adjacent(u, x);
  return v != y && h.adjacent(v, y);
}

}  // namespace oracle

#endif  // LEXDOM_TESTS_ORACLE_HPP_
