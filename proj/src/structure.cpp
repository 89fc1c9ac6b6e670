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

#include "lexdom/structure.hpp"

#include <string>

#include "lexdom/errors.hpp"
#include "subset_search.hpp"

namespace lexdom {
namespace {

using detail::colex_search;
using detail::SearchNode;
using detail::SubsetSpace;

// Perfect dominating sets inducing a perfect matching. Any such set is an
// open packing, so a vertex with two chosen neighbours kills the branch.
struct EodVisitor {
  const SubsetSpace& space;
  bool found = false;
  Bits first = 0;

  bool prune(const SearchNode& n, int, int) const { return n.twos != 0; }
  void leaf(const SearchNode& n) {
    const Bits out = space.all() & ~n.chosen;
    const bool matched = (n.chosen & ~n.ones) == 0;
    if (n.twos == 0 && matched && (out & ~n.ones) == 0 && !found) {
      found = true;
      first = n.chosen;
    }
  }
  bool stop() const { return found; }
};

// Dominating packings.
struct EcdVisitor {
  const SubsetSpace& space;
  bool found = false;
  Bits first = 0;

  bool prune(const SearchNode& n, int pos, int) const {
    if (n.twos != 0 || (n.chosen & n.ones) != 0) return true;
    const Bits out = space.decided(pos) & ~n.chosen;
    return (out & space.frozen(pos) & ~n.ones) != 0;
  }
  void leaf(const SearchNode& n) {
    const Bits out = space.all() & ~n.chosen;
    if ((out & ~n.ones) == 0 && !found) {
      found = true;
      first = n.chosen;
    }
  }
  bool stop() const { return found; }
};

void check_scan(const Graph& g, const SolverLimits& limits, std::string_view what) {
  if (g.order() > limits.max_scan_order) {
    throw CapacityError(std::string(what) + ": order " + std::to_string(g.order()) +
                        " exceeds subset-search cap");
  }
}

}  // namespace

std::optional<VertexSet> is_efficient_open_domination(const Graph& g,
                                                      const SolverLimits& limits) {
  check_scan(g, limits, "efficient open domination");
  if (first_isolated_vertex(g)) return std::nullopt;
  const SubsetSpace space(g);
  for (int k = 2; k <= g.order(); k += 2) {
    EodVisitor visitor{space};
    colex_search(space, k, visitor);
    if (!visitor.found) continue;
    const VertexSet s(g.order(), visitor.first);
    const int gamma_t = solve(g, ParameterKind::kGammaT, limits).value;
    const int rho_o = solve(g, ParameterKind::kRhoO, limits).value;
    if (s.size() != gamma_t || s.size() != rho_o) {
      throw InconsistencyError("efficient open dominating set of size " +
                               std::to_string(s.size()) + " but gamma_t = " +
                               std::to_string(gamma_t) + ", rho_o = " +
                               std::to_string(rho_o));
    }
    return s;
  }
  return std::nullopt;
}

std::optional<VertexSet> is_efficient_closed_domination(const Graph& g,
                                                        const SolverLimits& limits) {
  check_scan(g, limits, "efficient closed domination");
  const SubsetSpace space(g);
  for (int k = 1; k <= g.order(); ++k) {
    EcdVisitor visitor{space};
    colex_search(space, k, visitor);
    if (visitor.found) return VertexSet(g.order(), visitor.first);
  }
  return std::nullopt;
}

std::string_view to_string(HypothesisKind kind) {
  switch (kind) {
    case HypothesisKind::kP1: return "P1";
    case HypothesisKind::kP2: return "P2";
    case HypothesisKind::kP3: return "P3";
  }
  return "?";
}

HypothesisCheck check_hypothesis(const Graph& g, const Graph& h, HypothesisKind kind,
                                 const SolverLimits& limits) {
  if (g.order() < 2 || h.order() < 2) {
    throw DomainError("hypothesis " + std::string(to_string(kind)) +
                      " is defined for nontrivial factors only");
  }
  HypothesisFacts facts{
      degree_extremes(h).min_degree,
      solve(h, ParameterKind::kGamma, limits).value,
      is_efficient_open_domination(g, limits),
      is_efficient_closed_domination(g, limits),
      solve(g, ParameterKind::kGammaP, limits).value,
      std::nullopt,
  };
  if (!first_isolated_vertex(g)) {
    facts.g_gamma_t = solve(g, ParameterKind::kGammaT, limits).value;
  }
  const bool p1 = facts.h_min_degree == 0 && facts.g_eod.has_value();
  bool holds = false;
  switch (kind) {
    case HypothesisKind::kP1: holds = p1; break;
    case HypothesisKind::kP2: holds = facts.h_gamma == 1 && facts.g_ecd.has_value(); break;
    case HypothesisKind::kP3:
      holds = p1 && facts.g_gamma_t && facts.g_gamma_p == *facts.g_gamma_t;
      break;
  }
  return {kind, holds, std::move(facts)};
}

bool graph_class(const Graph& g, GraphClass which, const SolverLimits& limits) {
  if (which == GraphClass::kRoman) {
    return solve(g, ParameterKind::kGammaR, limits).value ==
           2 * solve(g, ParameterKind::kGamma, limits).value;
  }
  return solve(g, ParameterKind::kGammaRp, limits).value ==
         2 * solve(g, ParameterKind::kGammaP, limits).value;
}

bool is_dominating_couple(const Graph& g, const VertexSet& a, const VertexSet& b) {
  if (a.order() != g.order() || b.order() != g.order()) {
    throw PreconditionError("couple sets must match the graph order");
  }
  if ((a.bits() & b.bits()) != 0) {
    throw PreconditionError("dominating couple sets must be disjoint");
  }
  const Bits covered = open_neighborhood_of(g, a.bits() | b.bits());
  return (g.all() & ~b.bits() & ~covered) == 0;
}

std::optional<CoronaShape> detect_corona(const Graph& g) {
  Bits leaves = 0;
  for (int v = 0; v < g.order(); ++v) {
    if (g.degree(v) == 1) leaves |= bit(v);
  }
  Bits base = 0;
  for_each_bit(leaves, [&](int v) { base |= g.neighbors(v); });
  if ((base & leaves) != 0 || (base | leaves) != g.all() || base == 0) return std::nullopt;
  int k = -1;
  int base_min_degree = g.order();
  bool ok = true;
  for_each_bit(base, [&](int v) {
    const int pendants = popcount(g.neighbors(v) & leaves);
    if (k < 0) k = pendants;
    if (pendants != k) ok = false;
    base_min_degree = std::min(base_min_degree, popcount(g.neighbors(v) & base));
  });
  if (!ok) return std::nullopt;
  return CoronaShape{VertexSet(g.order(), base), k, base_min_degree};
}

}  // namespace lexdom
