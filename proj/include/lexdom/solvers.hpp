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

// Exact solvers for the domination-type parameters.
//
// Set kinds (gamma, gamma_t, gamma_p, rho, rho_o) search subsets by size;
// within a size, subsets are visited in increasing numeric mask order, so
// the first feasible set found is the canonical witness.
//
// Roman kinds are solved over the set V2 alone. Given V2, every other vertex
// has a forced optimal weight: for gamma_R it is 0 iff it has a V2-neighbour,
// for gamma_Rp it is 0 iff it has exactly one V2-neighbour. Weights outside
// V2 do not interact, so the completion is optimal and optimal functions
// correspond one-to-one with optimal V2 sets. gamma_tR additionally searches
// the cheapest V1 making V1 u V2 total dominating.

#ifndef LEXDOM_SOLVERS_HPP_
#define LEXDOM_SOLVERS_HPP_

#include <cstdint>
#include <optional>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "lexdom/graph.hpp"
#include "lexdom/roman.hpp"
#include "lexdom/vertex_set.hpp"

namespace lexdom {

enum class ParameterKind {
  kGamma,    // domination number
  kGammaT,   // total domination number
  kGammaP,   // perfect domination number
  kRho,      // packing number
  kRhoO,     // open packing number
  kGammaR,   // Roman domination number
  kGammaRp,  // perfect Roman domination number
  kGammaTR,  // total Roman domination number
};

std::string_view to_string(ParameterKind kind);
std::optional<ParameterKind> parse_parameter_kind(std::string_view name);
bool is_set_kind(ParameterKind kind);

struct SolverLimits {
  // Largest order accepted by the subset searches.
  int max_scan_order = 26;
  // Largest order accepted by 3^n searches (zeta, gamma_tR).
  int max_ternary_order = 14;
};

using Witness = std::variant<VertexSet, RomanAssignment>;

struct SolveResult {
  ParameterKind kind;
  int value;
  Witness witness;
  std::uint64_t explored;  // search nodes visited; diagnostic only
};

// Defining predicate of a set kind. Roman kinds throw PreconditionError.
bool is_feasible(const Graph& g, const VertexSet& s, ParameterKind kind);

// Exact optimum with canonical witness. Total kinds throw DomainError on an
// isolated vertex; orders above the caps throw CapacityError.
SolveResult solve(const Graph& g, ParameterKind kind, const SolverLimits& limits = {});

// The optimal completion of v2 for kind gamma_R or gamma_Rp.
RomanAssignment forced_completion(const Graph& g, Bits v2, ParameterKind kind);

// Every V2 set of an optimal gamma_R / gamma_Rp function, ascending by mask.
std::vector<VertexSet> enumerate_optimal_v2(const Graph& g, ParameterKind kind,
                                            const SolverLimits& limits = {});

// Every optimal set of a set kind, ascending by mask.
std::vector<VertexSet> enumerate_optimal_sets(const Graph& g, ParameterKind kind,
                                              const SolverLimits& limits = {});

// Every open packing (including the empty set), ascending by mask.
std::vector<VertexSet> enumerate_open_packings(const Graph& g,
                                               const SolverLimits& limits = {});

// (A, B) disjoint; every vertex outside B has a neighbour in A u B.
struct DominatingCouple {
  VertexSet a;
  VertexSet b;
};

struct ZetaResult {
  int value;  // min 2|A| + 3|B|
  DominatingCouple couple;
};

// Requires no isolated vertex. Ties resolve to the smallest A mask, then the
// smallest B mask.
ZetaResult zeta(const Graph& g, const SolverLimits& limits = {});
std::vector<DominatingCouple> enumerate_zeta_couples(const Graph& g,
                                                     const SolverLimits& limits = {});

// S = S0 u S1 split into isolated and non-isolated vertices of G[S].
struct ZetaPrimeResult {
  int value;  // 4|S0| + 2|S1|
  VertexSet set;
};

// Minimum over dominating open packings; nullopt when there is none.
std::optional<ZetaPrimeResult> zeta_prime(const Graph& g, const SolverLimits& limits = {});

}  // namespace lexdom

#endif  // LEXDOM_SOLVERS_HPP_
