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

// Closed-form values and bounds for parameters of G ∘ H, computed from
// factor invariants only, plus constructive witnesses that realise them.

#ifndef LEXDOM_FORMULA_HPP_
#define LEXDOM_FORMULA_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lexdom/graph.hpp"
#include "lexdom/product.hpp"
#include "lexdom/solvers.hpp"
#include "lexdom/structure.hpp"
#include "lexdom/vertex_set.hpp"

namespace lexdom {

enum class TheoremId {
  kGammaLex,             // gamma(G∘H)
  kGammapLex,            // gamma_p(G∘H)
  kRomanLex,             // gamma_R(G∘H), three cases on Delta(H)
  kRomanLb,              // gamma_R(G∘H) >= 2 gamma(G)
  kRomanUb,              // gamma_R(G∘H) <= 2 gamma_t(G)
  kRomanGraphCor,        // G∘H is Roman when Delta(H) != n(H) - 2
  kZetaBounds,           // bounds on zeta(G)
  kPrUbCorona,           // gamma_Rp(G∘H) <= gamma_p(G)(n(H)+1), tight on coronas
  kPrUbFunctionI,
  kPrUbFunctionII,
  kPrUbFunctionIII,
  kPrUbFunctionIV,
  kPrUbPacking,          // bound from open packings
  kPrCorEod,
  kPrCorEcd,
  kPrGamma1I,            // gamma(G) = 1, delta(G) >= 2
  kPrGamma1II,           // gamma(G) = 1, delta(G) = 1
  kPrLbGeneral,
  kPrExactEcd,
  kPrExactEod,
  kPrCorP2P3,
  kPrTrivialLb,
  kPrEqFactor,           // gamma_Rp(G∘H) = gamma_Rp(G) iff ...
  kPrEq2Gamma,           // gamma_Rp(G∘H) = 2 gamma(G) iff ...
  kPrIsolatedLayers,
  kPrPerfectRomanChar,   // G∘H perfect Roman iff ...
  kPrEqRomanChar,        // gamma_Rp(G∘H) = gamma_R(G∘H) iff ...
  kLemmaRomanMaxV2,      // optimal RDF with max |V2| on G∘H
  kLemmaLayerDichotomy,  // optimal PRDF layer weights on G∘H
};

std::string_view to_string(TheoremId id);
std::optional<TheoremId> parse_theorem_id(std::string_view name);
std::vector<TheoremId> all_theorem_ids();

// Factor invariants, computed once. Fields that exceed a solver cap stay
// empty and are listed in `unavailable`.
struct FactorProfile {
  Graph graph;
  int order = 0;
  int min_degree = 0;
  int max_degree = 0;
  bool connected = false;
  bool has_isolated = false;
  int gamma = 0;
  int gamma_p = 0;
  int rho = 0;
  int gamma_R = 0;
  int gamma_Rp = 0;
  std::optional<int> gamma_t;
  std::optional<int> gamma_tR;
  std::optional<ZetaResult> zeta;
  std::vector<DominatingCouple> zeta_couples;
  std::optional<ZetaPrimeResult> zeta_prime;
  std::optional<VertexSet> eod;
  std::optional<VertexSet> ecd;
  std::optional<CoronaShape> corona;
  std::vector<VertexSet> gamma_p_sets;
  std::vector<VertexSet> gamma_t_sets;
  std::vector<VertexSet> optimal_prdf_v2;
  std::vector<VertexSet> open_packings;
  std::vector<std::string> unavailable;

  static FactorProfile compute(const Graph& g, const SolverLimits& limits = {});
};

// Hypotheses P1, P2, P3 evaluated on profiles; false for trivial factors.
bool holds_p1(const FactorProfile& g, const FactorProfile& h);
bool holds_p2(const FactorProfile& g, const FactorProfile& h);
bool holds_p3(const FactorProfile& g, const FactorProfile& h);

enum class Relation { kExact, kLower, kUpper, kNotEqual };

std::string_view to_string(Relation relation);

struct Finding {
  TheoremId id;
  std::string branch;
  Relation relation;
  int value;
  std::string facts;  // the factor values that fired the statement
};

// "ID" or "ID:branch".
std::string label(const Finding& finding);

struct TheoremSkip {
  TheoremId id;
  std::string reason;
};

struct Evaluation {
  std::vector<Finding> findings;
  std::vector<TheoremSkip> skipped;
};

// Supported kinds: gamma, gamma_p, gamma_R, gamma_Rp.
Evaluation evaluate_theorems(const FactorProfile& g, const FactorProfile& h,
                             ParameterKind kind);

struct Prediction {
  ParameterKind kind;
  int lo;
  int hi;
  std::vector<Finding> provenance;  // every finding that fired

  bool exact() const { return lo == hi; }
};

// Throws DomainError if no statement applies and InconsistencyError if the
// statements contradict each other.
Prediction predict(const FactorProfile& g, const FactorProfile& h, ParameterKind kind);
Prediction predict(const Graph& g, const Graph& h, ParameterKind kind,
                   const SolverLimits& limits = {});

// Conditions of the iff-characterisations, or nullopt when the statement's
// standing hypotheses fail.
std::optional<bool> eq_factor_condition(const FactorProfile& g, const FactorProfile& h);
std::optional<bool> eq_2gamma_condition(const FactorProfile& g, const FactorProfile& h);

// Perfect Roman characterisation of G∘H: if G∘H is perfect Roman then
// `necessary` holds, and if `sufficient` is present and true then G∘H is
// perfect Roman. Nullopt outside the standing hypotheses.
struct PerfectRomanCondition {
  std::string branch;
  bool necessary;
  std::optional<bool> sufficient;
};

std::optional<PerfectRomanCondition> perfect_roman_condition(const FactorProfile& g,
                                                            const FactorProfile& h);

// Condition for gamma_Rp(G∘H) = gamma_R(G∘H).
struct RomanEqualityCondition {
  std::string branch;
  bool holds;
};

std::optional<RomanEqualityCondition> roman_equality_condition(const FactorProfile& g,
                                                              const FactorProfile& h);

struct ConstructedWitness {
  TheoremId id;
  std::string branch;
  ParameterKind kind;
  LexProduct product;
  Witness witness;
  int weight;
  int bound;
};

// Builds the function or set from the proof of `id` on G∘H, checks it is
// feasible and that its weight equals the stated bound. DomainError when the
// hypotheses fail, PreconditionError when `id` has no construction.
ConstructedWitness construct_witness(TheoremId id, const Graph& g, const Graph& h,
                                     const SolverLimits& limits = {});

}  // namespace lexdom

#endif  // LEXDOM_FORMULA_HPP_
