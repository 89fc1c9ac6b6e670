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

#include "lexdom/solvers.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <string>

#include "lexdom/errors.hpp"
#include "subset_search.hpp"

namespace lexdom {
namespace {

using detail::colex_search;
using detail::SearchNode;
using detail::SubsetSpace;

constexpr std::array<std::pair<ParameterKind, std::string_view>, 8> kKindNames{{
    {ParameterKind::kGamma, "gamma"},
    {ParameterKind::kGammaT, "gamma_t"},
    {ParameterKind::kGammaP, "gamma_p"},
    {ParameterKind::kRho, "rho"},
    {ParameterKind::kRhoO, "rho_o"},
    {ParameterKind::kGammaR, "gamma_R"},
    {ParameterKind::kGammaRp, "gamma_Rp"},
    {ParameterKind::kGammaTR, "gamma_tR"},
}};

void check_scan_cap(const Graph& g, const SolverLimits& limits, std::string_view what) {
  if (g.order() > limits.max_scan_order) {
    throw CapacityError(std::string(what) + ": order " + std::to_string(g.order()) +
                        " exceeds subset-search cap " +
                        std::to_string(limits.max_scan_order));
  }
}

void check_ternary_cap(const Graph& g, const SolverLimits& limits, std::string_view what) {
  if (g.order() > limits.max_ternary_order) {
    throw CapacityError(std::string(what) + ": order " + std::to_string(g.order()) +
                        " exceeds 3^n search cap " +
                        std::to_string(limits.max_ternary_order));
  }
}

void require_no_isolated(const Graph& g, std::string_view what) {
  if (auto v = first_isolated_vertex(g)) {
    throw DomainError(std::string(what) + " is undefined: vertex " + std::to_string(*v) +
                      " is isolated");
  }
}

// Feasibility tests on a finished node and on partial nodes.
struct SetRules {
  ParameterKind kind;

  bool feasible(const SubsetSpace& s, const SearchNode& n) const {
    const Bits out = s.all() & ~n.chosen;
    switch (kind) {
      case ParameterKind::kGamma: return (out & ~n.ones) == 0;
      case ParameterKind::kGammaT: return (s.all() & ~n.ones) == 0;
      case ParameterKind::kGammaP: return (out & ~n.ones) == 0 && (out & n.twos) == 0;
      case ParameterKind::kRho: return n.twos == 0 && (n.chosen & n.ones) == 0;
      case ParameterKind::kRhoO: return n.twos == 0;
      default: return false;
    }
  }

  bool dead(const SubsetSpace& s, const SearchNode& n, int pos) const {
    const Bits out = s.decided(pos) & ~n.chosen;
    switch (kind) {
      case ParameterKind::kGamma: return (out & s.frozen(pos) & ~n.ones) != 0;
      case ParameterKind::kGammaT: return (s.settled(pos) & ~n.ones) != 0;
      case ParameterKind::kGammaP:
        return (out & n.twos) != 0 || (out & s.frozen(pos) & ~n.ones) != 0;
      case ParameterKind::kRho: return n.twos != 0 || (n.chosen & n.ones) != 0;
      case ParameterKind::kRhoO: return n.twos != 0;
      default: return true;
    }
  }
};

// Finds the first feasible k-subset, or collects all of them.
struct SetVisitor {
  const SubsetSpace& space;
  SetRules rules;
  bool collect = false;
  bool found = false;
  Bits first = 0;
  std::vector<Bits> all;

  bool prune(const SearchNode& n, int pos, int) const { return rules.dead(space, n, pos); }
  void leaf(const SearchNode& n) {
    if (!rules.feasible(space, n)) return;
    if (!found) first = n.chosen;
    found = true;
    if (collect) all.push_back(n.chosen);
  }
  bool stop() const { return found && !collect; }
};

struct SetOptimum {
  int size;
  Bits witness;
  std::uint64_t explored;
};

bool is_maximisation(ParameterKind kind) {
  return kind == ParameterKind::kRho || kind == ParameterKind::kRhoO;
}

SetOptimum solve_set_kind(const Graph& g, ParameterKind kind) {
  const SubsetSpace space(g);
  std::uint64_t explored = 0;
  if (is_maximisation(kind)) {
    SetOptimum best{0, 0, 0};
    for (int k = 0; k <= g.order(); ++k) {
      SetVisitor visitor{space, {kind}};
      explored += colex_search(space, k, visitor);
      if (!visitor.found) break;
      best = {k, visitor.first, 0};
    }
    best.explored = explored;
    return best;
  }
  for (int k = 0; k <= g.order(); ++k) {
    SetVisitor visitor{space, {kind}};
    explored += colex_search(space, k, visitor);
    if (visitor.found) return {k, visitor.first, explored};
  }
  throw InconsistencyError("no feasible set found for " + std::string(to_string(kind)));
}

// gamma_R / gamma_Rp over V2, with forced completion.
struct RomanVisitor {
  const SubsetSpace& space;
  bool perfect;
  int k = 0;
  // Search mode: keep the incumbent. Collect mode: gather every V2 of cost
  // exactly `target`.
  bool collect = false;
  int target = 0;
  int best = std::numeric_limits<int>::max();
  Bits best_mask = 0;
  std::vector<Bits> hits;

  Bits bad(const SearchNode& n, Bits out) const {
    return perfect ? (out & (~n.ones | n.twos)) : (out & ~n.ones);
  }

  bool prune(const SearchNode& n, int pos, int) const {
    const Bits out = space.decided(pos) & ~n.chosen;
    Bits locked = out & space.frozen(pos) & ~n.ones;
    if (perfect) locked |= out & n.twos;
    const int lb = 2 * k + popcount(locked);
    return lb > (collect ? target : best);
  }

  void leaf(const SearchNode& n) {
    const int cost = 2 * k + popcount(bad(n, space.all() & ~n.chosen));
    if (collect) {
      if (cost == target) hits.push_back(n.chosen);
      return;
    }
    if (cost < best || (cost == best && n.chosen < best_mask)) {
      best = cost;
      best_mask = n.chosen;
    }
  }
  bool stop() const { return false; }
};

struct RomanOptimum {
  int value;
  Bits v2;
  std::uint64_t explored;
};

RomanOptimum solve_roman(const Graph& g, bool perfect) {
  const SubsetSpace space(g);
  RomanVisitor visitor{space, perfect};
  // V2 = {} with everything at weight 1 is always feasible.
  visitor.best = g.order();
  visitor.best_mask = 0;
  std::uint64_t explored = 0;
  for (int k = 1; k <= g.order() && 2 * k <= visitor.best; ++k) {
    visitor.k = k;
    explored += colex_search(space, k, visitor);
  }
  return {visitor.best, visitor.best_mask, explored};
}

std::vector<Bits> collect_roman(const Graph& g, bool perfect, int target) {
  const SubsetSpace space(g);
  RomanVisitor visitor{space, perfect};
  visitor.collect = true;
  visitor.target = target;
  for (int k = 0; k <= g.order() && 2 * k <= target; ++k) {
    visitor.k = k;
    colex_search(space, k, visitor);
  }
  std::sort(visitor.hits.begin(), visitor.hits.end());
  return visitor.hits;
}

// Smallest extra V1 making base | extra total dominating.
struct TotalCompletion {
  const SubsetSpace& space;
  Bits base_ones;
  bool found = false;
  Bits first = 0;

  bool prune(const SearchNode& n, int pos, int) const {
    return (space.settled(pos) & ~(n.ones | base_ones)) != 0;
  }
  void leaf(const SearchNode& n) {
    if ((space.all() & ~(n.ones | base_ones)) == 0 && !found) {
      found = true;
      first = n.chosen;
    }
  }
  bool stop() const { return found; }
};

struct TotalRomanVisitor {
  const SubsetSpace& space;
  const Graph& g;
  int k = 0;
  int best = std::numeric_limits<int>::max();
  Bits best_v1 = 0;
  Bits best_v2 = 0;
  std::uint64_t inner_explored = 0;

  bool prune(const SearchNode& n, int pos, int) const {
    const Bits out = space.decided(pos) & ~n.chosen;
    return 2 * k + popcount(out & space.frozen(pos) & ~n.ones) > best;
  }

  void leaf(const SearchNode& n) {
    const Bits v2 = n.chosen;
    const Bits forced = space.all() & ~(v2 | n.ones);
    const int base = 2 * k + popcount(forced);
    if (base > best) return;
    const Bits positive = v2 | forced;
    const Bits base_ones = open_neighborhood_of(g, positive);
    const SubsetSpace extra(g, space.all() & ~positive);
    for (int x = 0; base + x <= best && x <= extra.size(); ++x) {
      TotalCompletion completion{extra, base_ones};
      inner_explored += colex_search(extra, x, completion);
      if (!completion.found) continue;
      const Bits v1 = forced | completion.first;
      const int cost = base + x;
      if (cost < best || (cost == best && (v2 < best_v2 || (v2 == best_v2 && v1 < best_v1)))) {
        best = cost;
        best_v1 = v1;
        best_v2 = v2;
      }
      break;
    }
  }
  bool stop() const { return false; }
};

SolveResult solve_total_roman(const Graph& g) {
  const SubsetSpace space(g);
  TotalRomanVisitor visitor{space, g};
  std::uint64_t explored = 0;
  for (int k = 0; k <= g.order() && 2 * k <= visitor.best; ++k) {
    visitor.k = k;
    explored += colex_search(space, k, visitor);
  }
  return {ParameterKind::kGammaTR, visitor.best,
          RomanAssignment::from_levels(g.order(), visitor.best_v1, visitor.best_v2),
          explored + visitor.inner_explored};
}

template <class Fn>
void for_each_submask_ascending(Bits set, Fn&& fn) {
  Bits sub = 0;
  do {
    if (!fn(sub)) return;
    sub = (sub - set) & set;
  } while (sub != 0);
}

bool is_couple(const Graph& g, Bits a, Bits b) {
  const Bits covered = open_neighborhood_of(g, a | b);
  return (g.all() & ~b & ~covered) == 0;
}

// Scans disjoint (A, B) pairs in (A, B) mask order. With collect, gathers
// every couple of cost `target`.
std::vector<DominatingCouple> scan_couples(const Graph& g, bool collect, int target,
                                           int& best_out) {
  const int n = g.order();
  const Bits all = g.all();
  int best = collect ? target : std::numeric_limits<int>::max();
  Bits best_a = 0, best_b = 0;
  std::vector<DominatingCouple> hits;
  for (Bits a = 0;; ++a) {
    const int ca = 2 * popcount(a);
    if (ca <= best) {
      for_each_submask_ascending(all & ~a, [&](Bits b) {
        const int cost = ca + 3 * popcount(b);
        if (collect ? cost != target : cost >= best) return true;
        if (!is_couple(g, a, b)) return true;
        if (collect) {
          hits.push_back({VertexSet(n, a), VertexSet(n, b)});
        } else {
          best = cost;
          best_a = a;
          best_b = b;
        }
        return true;
      });
    }
    if (a == all) break;
  }
  best_out = best;
  if (!collect) hits.push_back({VertexSet(n, best_a), VertexSet(n, best_b)});
  return hits;
}

}  // namespace

std::string_view to_string(ParameterKind kind) {
  for (const auto& [k, name] : kKindNames) {
    if (k == kind) return name;
  }
  return "?";
}

std::optional<ParameterKind> parse_parameter_kind(std::string_view name) {
  for (const auto& [k, n] : kKindNames) {
    if (n == name) return k;
  }
  return std::nullopt;
}

bool is_set_kind(ParameterKind kind) {
  switch (kind) {
    case ParameterKind::kGamma:
    case ParameterKind::kGammaT:
    case ParameterKind::kGammaP:
    case ParameterKind::kRho:
    case ParameterKind::kRhoO: return true;
    default: return false;
  }
}

bool is_feasible(const Graph& g, const VertexSet& s, ParameterKind kind) {
  if (!is_set_kind(kind)) {
    throw PreconditionError(std::string(to_string(kind)) +
                            " is a Roman kind; it takes a RomanAssignment");
  }
  if (s.order() != g.order()) throw PreconditionError("vertex set order does not match graph");
  const SubsetSpace space(g);
  SearchNode node;
  for_each_bit(s.bits(), [&](int v) { node = space.add(node, v); });
  return SetRules{kind}.feasible(space, node);
}

SolveResult solve(const Graph& g, ParameterKind kind, const SolverLimits& limits) {
  const std::string what(to_string(kind));
  if (kind == ParameterKind::kGammaT || kind == ParameterKind::kGammaTR) {
    require_no_isolated(g, what);
  }
  if (kind == ParameterKind::kGammaTR) {
    check_ternary_cap(g, limits, what);
    return solve_total_roman(g);
  }
  check_scan_cap(g, limits, what);
  if (is_set_kind(kind)) {
    const SetOptimum opt = solve_set_kind(g, kind);
    return {kind, opt.size, VertexSet(g.order(), opt.witness), opt.explored};
  }
  const RomanOptimum opt = solve_roman(g, kind == ParameterKind::kGammaRp);
  return {kind, opt.value, forced_completion(g, opt.v2, kind), opt.explored};
}

RomanAssignment forced_completion(const Graph& g, Bits v2, ParameterKind kind) {
  if (kind != ParameterKind::kGammaR && kind != ParameterKind::kGammaRp) {
    throw PreconditionError("forced completion is defined for gamma_R and gamma_Rp");
  }
  Bits ones = 0, twos = 0;
  for_each_bit(v2, [&](int v) {
    twos |= ones & g.neighbors(v);
    ones |= g.neighbors(v);
  });
  const Bits zero_ok = kind == ParameterKind::kGammaR ? ones : (ones & ~twos);
  return RomanAssignment::from_levels(g.order(), g.all() & ~v2 & ~zero_ok, v2);
}

std::vector<VertexSet> enumerate_optimal_v2(const Graph& g, ParameterKind kind,
                                            const SolverLimits& limits) {
  if (kind != ParameterKind::kGammaR && kind != ParameterKind::kGammaRp) {
    throw PreconditionError("optimal V2 enumeration is defined for gamma_R and gamma_Rp");
  }
  check_scan_cap(g, limits, to_string(kind));
  const bool perfect = kind == ParameterKind::kGammaRp;
  const int value = solve_roman(g, perfect).value;
  std::vector<VertexSet> out;
  for (Bits b : collect_roman(g, perfect, value)) out.emplace_back(g.order(), b);
  return out;
}

std::vector<VertexSet> enumerate_optimal_sets(const Graph& g, ParameterKind kind,
                                              const SolverLimits& limits) {
  if (!is_set_kind(kind)) {
    throw PreconditionError("optimal set enumeration is defined for set kinds only");
  }
  if (kind == ParameterKind::kGammaT) require_no_isolated(g, "gamma_t");
  check_scan_cap(g, limits, to_string(kind));
  const int size = solve_set_kind(g, kind).size;
  const SubsetSpace space(g);
  SetVisitor visitor{space, {kind}, true};
  colex_search(space, size, visitor);
  std::vector<VertexSet> out;
  for (Bits b : visitor.all) out.emplace_back(g.order(), b);
  return out;
}

std::vector<VertexSet> enumerate_open_packings(const Graph& g, const SolverLimits& limits) {
  check_scan_cap(g, limits, "open packing enumeration");
  const SubsetSpace space(g);
  std::vector<Bits> masks;
  for (int k = 0; k <= g.order(); ++k) {
    SetVisitor visitor{space, {ParameterKind::kRhoO}, true};
    colex_search(space, k, visitor);
    if (!visitor.found) break;
    masks.insert(masks.end(), visitor.all.begin(), visitor.all.end());
  }
  std::sort(masks.begin(), masks.end());
  std::vector<VertexSet> out;
  out.reserve(masks.size());
  for (Bits b : masks) out.emplace_back(g.order(), b);
  return out;
}

ZetaResult zeta(const Graph& g, const SolverLimits& limits) {
  require_no_isolated(g, "zeta");
  check_ternary_cap(g, limits, "zeta");
  int best = 0;
  auto hits = scan_couples(g, false, 0, best);
  return {best, hits.front()};
}

std::vector<DominatingCouple> enumerate_zeta_couples(const Graph& g,
                                                     const SolverLimits& limits) {
  const int value = zeta(g, limits).value;
  int unused = 0;
  return scan_couples(g, true, value, unused);
}

std::optional<ZetaPrimeResult> zeta_prime(const Graph& g, const SolverLimits& limits) {
  std::optional<ZetaPrimeResult> best;
  for (const VertexSet& s : enumerate_open_packings(g, limits)) {
    const Bits inner = open_neighborhood_of(g, s.bits());
    if ((g.all() & ~(s.bits() | inner)) != 0) continue;  // not dominating
    const Bits s1 = s.bits() & inner;
    const int value = 4 * popcount(s.bits() & ~s1) + 2 * popcount(s1);
    if (!best || value < best->value) best = ZetaPrimeResult{value, s};
  }
  return best;
}

}  // namespace lexdom
