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

// Exhaustive checking of the product statements against exact solvers.

#ifndef LEXDOM_VERIFY_HPP_
#define LEXDOM_VERIFY_HPP_

#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "lexdom/formula.hpp"
#include "lexdom/graph.hpp"
#include "lexdom/solvers.hpp"

namespace lexdom {

enum class ClaimStatus { kPass, kFail, kIndeterminate, kNotApplicable, kSkipped };

std::string_view to_string(ClaimStatus status);

struct ClaimRecord {
  // Theorem id, "PREDICT:<kind>", or an invariant name. Iff statements get
  // ":=>" and ":<=" suffixes, one per direction.
  std::string claim;
  std::string branch;
  ClaimStatus status;
  std::string predicted;
  std::string measured;
  std::string detail;
  // Filled on failure: optimal functions/sets on G∘H (indices u*n(H)+v) and
  // the factor facts, enough to replay the check by hand.
  std::vector<std::string> witnesses;
};

struct PairReport {
  std::string g6_g;
  std::string g6_h;
  int product_order = 0;
  bool skipped = false;
  std::string skip_reason;
  std::vector<ClaimRecord> records;

  bool failed() const;
};

struct VerifyOptions {
  // Theorem ids to check; empty means all. PREDICT claims are selected by
  // the name "PREDICT".
  std::set<std::string> claims;
  SolverLimits limits;
  // Pairs whose product exceeds this order are skipped.
  int max_product_order = 20;
  // Layer dichotomy and max-|V2| lemma run up to this product order.
  int lemma_max_order = 14;
  int workers = 1;
};

bool claim_selected(const VerifyOptions& options, std::string_view claim);

PairReport verify_pair(const FactorProfile& g, const FactorProfile& h,
                       const VerifyOptions& options = {});
PairReport verify_pair(const Graph& g, const Graph& h, const VerifyOptions& options = {});

// Layer dichotomy over all optimal PRDFs and the max-|V2| RDF lemma on G∘H.
// CapacityError above `max_order`.
std::vector<ClaimRecord> check_structural_lemmas(const Graph& g, const Graph& h,
                                                 int max_order = 14,
                                                 const SolverLimits& limits = {});

// Parameter chains on a single graph, plus gamma = rho when g is a tree.
std::vector<ClaimRecord> check_invariants(const Graph& g, const SolverLimits& limits = {});

struct ClaimTotals {
  int applicable = 0;
  int passed = 0;
  int failed = 0;
  int indeterminate = 0;
  int not_applicable = 0;
  int skipped = 0;
};

struct CorpusReport {
  int pairs = 0;
  int pairs_skipped = 0;
  std::map<std::string, ClaimTotals> totals;
  std::vector<PairReport> failures;  // pairs with at least one failed record

  int failure_count() const;
};

// Every (g, h) in gs x hs. Totals do not depend on input order or workers.
CorpusReport verify_corpus(const std::vector<Graph>& gs, const std::vector<Graph>& hs,
                           const VerifyOptions& options = {});

void add_records(CorpusReport& report, const std::vector<ClaimRecord>& records);

}  // namespace lexdom

#endif  // LEXDOM_VERIFY_HPP_
