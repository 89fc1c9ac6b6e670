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

// Structural predicates on factor graphs. Every predicate that can return a
// witness does, so verification reports stay auditable.

#ifndef LEXDOM_STRUCTURE_HPP_
#define LEXDOM_STRUCTURE_HPP_

#include <optional>
#include <string_view>

#include "lexdom/graph.hpp"
#include "lexdom/solvers.hpp"
#include "lexdom/vertex_set.hpp"

namespace lexdom {

// A perfect dominating set S with G[S] a disjoint union of edges, or nullopt.
// Throws InconsistencyError if a witness ever fails |S| = gamma_t = rho_o.
std::optional<VertexSet> is_efficient_open_domination(const Graph& g,
                                                      const SolverLimits& limits = {});

// A dominating set that is also a packing (necessarily a gamma-set), or
// nullopt.
std::optional<VertexSet> is_efficient_closed_domination(const Graph& g,
                                                        const SolverLimits& limits = {});

enum class HypothesisKind {
  kP1,  // delta(H) = 0 and G is an efficient open domination graph
  kP2,  // gamma(H) = 1 and G is an efficient closed domination graph
  kP3,  // P1 and gamma_p(G) = gamma_t(G)
};

std::string_view to_string(HypothesisKind kind);

struct HypothesisFacts {
  int h_min_degree;
  int h_gamma;
  std::optional<VertexSet> g_eod;
  std::optional<VertexSet> g_ecd;
  int g_gamma_p;
  std::optional<int> g_gamma_t;  // absent when G has an isolated vertex
};

struct HypothesisCheck {
  HypothesisKind kind;
  bool holds;
  HypothesisFacts facts;
};

// Both factors must be nontrivial (order >= 2), else DomainError.
HypothesisCheck check_hypothesis(const Graph& g, const Graph& h, HypothesisKind kind,
                                 const SolverLimits& limits = {});

enum class GraphClass {
  kRoman,         // gamma_R = 2 gamma
  kPerfectRoman,  // gamma_Rp = 2 gamma_p
};

bool graph_class(const Graph& g, GraphClass which, const SolverLimits& limits = {});

// (A, B) must be disjoint, else PreconditionError.
bool is_dominating_couple(const Graph& g, const VertexSet& a, const VertexSet& b);

// G = G' ⊙ N_k: `base` induces G' and each base vertex carries exactly k
// pendant leaves.
struct CoronaShape {
  VertexSet base;
  int pendants;
  int base_min_degree;  // delta(G')
};

std::optional<CoronaShape> detect_corona(const Graph& g);

}  // namespace lexdom

#endif  // LEXDOM_STRUCTURE_HPP_
