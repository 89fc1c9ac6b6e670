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

// Acceptance checks. With no argument every criterion runs; with a number
// only that one. One PASS/FAIL line per criterion; exit status 1 if any
// criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "lexdom/formula.hpp"
#include "lexdom/graph_io.hpp"
#include "lexdom/product.hpp"
#include "lexdom/solvers.hpp"
#include "lexdom/verify.hpp"
#include "support/fixtures.hpp"
#include "support/oracle.hpp"

namespace {

using namespace lexdom;
using K = ParameterKind;
using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass;
  std::string detail;
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::vector<Graph> corpus(const char* name) {
  return load_corpus(std::string(LEXDOM_TEST_DATA_DIR) + "/" + name);
}

SolverLimits wide_limits() {
  SolverLimits limits;
  limits.max_scan_order = kMaxVertices;
  return limits;
}

Outcome figure_values() {
  struct Case {
    const char* name;
    Graph g;
    K kind;
    int expected;
  };
  const std::vector<Case> cases = {
      {"fig1 gamma_R", fixtures::figure1(), K::kGammaR, 4},
      {"fig1 gamma_Rp", fixtures::figure1(), K::kGammaRp, 4},
      {"fig2 gamma", fixtures::figure2(), K::kGamma, 3},
      {"fig2 gamma_R", fixtures::figure2(), K::kGammaR, 6},
      {"fig2 gamma_p", fixtures::figure2(), K::kGammaP, 6},
      {"fig2 gamma_Rp", fixtures::figure2(), K::kGammaRp, 9},
  };
  bool pass = true;
  std::ostringstream detail;
  for (const Case& c : cases) {
    const auto start = Clock::now();
    const int value = solve(c.g, c.kind).value;
    const double t = seconds_since(start);
    const bool ok = value == c.expected && t < 1.0;
    pass = pass && ok;
    if (detail.tellp() > 0) detail << ", ";
    detail << c.name << "=" << value;
    if (!ok) detail << " (expected " << c.expected << ")";
  }
  return {pass, detail.str()};
}

std::vector<std::vector<int>> lex_adjacency(const Graph& g, const Graph& h) {
  const int n = g.order() * h.order();
  std::vector<std::vector<int>> adj(n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (a != b && oracle::lex_adjacent(g, h, a, b)) adj[a].push_back(b);
    }
  }
  return adj;
}

Outcome figure_two_product_law() {
  const Graph g = fixtures::figure2();
  const char* hs[] = {"complete(2)", "empty(2)", "path(3)", "complete(3)", "empty(3)"};
  bool pass = true;
  std::ostringstream detail;
  const auto start = Clock::now();
  for (const char* spec : hs) {
    const Graph h = fixtures::family(spec);
    const SolveResult r = solve(lex_product(g, h).graph, K::kGammaRp, wide_limits());
    const int expected = 6 * h.order() + 3;
    pass = pass && r.value == expected;
    detail << spec << ":" << r.value;
    if (r.value != expected) {
      // The witness is re-checked against the definition on G∘H built from
      // the factors, so a smaller value stands without trusting the solver.
      const auto f = std::get<RomanAssignment>(r.witness).weights();
      int weight = 0;
      for (int x : f) weight += x;
      const bool valid = oracle::roman_ok(lex_adjacency(g, h), f, oracle::RomanKind::kPerfect);
      detail << "!=" << expected << (valid ? " (PRDF of weight " : " (INVALID witness of weight ")
             << weight << ")";
    }
    detail << "; ";
  }
  const double t = seconds_since(start);
  pass = pass && t < 600.0;
  detail << "in " << static_cast<int>(t) << "s";
  return {pass, detail.str()};
}

Outcome corona_tightness() {
  const Graph g = fixtures::family("corona(cycle(3),2)");
  const Graph h = fixtures::family("complete(2)");
  const auto start = Clock::now();
  const int value = solve(lex_product(g, h).graph, K::kGammaRp).value;
  const double t = seconds_since(start);
  const int expected = 3 * (h.order() + 1);
  return {value == expected && t < 5.0,
          "gamma_Rp=" + std::to_string(value) + " expected " + std::to_string(expected)};
}

// Profiles of every corpus graph, computed once.
struct SweepCorpus {
  std::vector<Graph> gs = corpus("connected_2_5.g6");
  std::vector<Graph> hs = corpus("all_2_4.g6");
  std::vector<FactorProfile> pgs;
  std::vector<FactorProfile> phs;

  SweepCorpus() {
    for (const Graph& g : gs) pgs.push_back(FactorProfile::compute(g));
    for (const Graph& h : hs) phs.push_back(FactorProfile::compute(h));
  }
};

const SweepCorpus& sweep_corpus() {
  static const SweepCorpus c;
  return c;
}

Outcome closed_formula_sweep() {
  const SweepCorpus& c = sweep_corpus();
  int checked = 0;
  int failures = 0;
  std::string first;
  for (std::size_t i = 0; i < c.gs.size(); ++i) {
    for (std::size_t j = 0; j < c.hs.size(); ++j) {
      const Graph p = lex_product(c.gs[i], c.hs[j]).graph;
      std::vector<K> kinds = {K::kGamma, K::kGammaR};
      if (c.pgs[i].connected) kinds.push_back(K::kGammaP);
      for (K kind : kinds) {
        const Prediction pred = predict(c.pgs[i], c.phs[j], kind);
        const int measured = solve(p, kind).value;
        ++checked;
        if (!pred.exact() || pred.lo != measured) {
          ++failures;
          if (first.empty()) {
            first = write_graph6(c.gs[i]) + "," + write_graph6(c.hs[j]) + " " +
                    std::string(to_string(kind));
          }
        }
      }
    }
  }
  return {failures == 0, std::to_string(checked) + " predictions, " + std::to_string(failures) +
                             " mismatches" + (first.empty() ? "" : " first " + first)};
}

std::string totals_line(const CorpusReport& report) {
  int passed = 0;
  int failed = 0;
  int indeterminate = 0;
  for (const auto& [claim, t] : report.totals) {
    passed += t.passed;
    failed += t.failed;
    indeterminate += t.indeterminate;
  }
  return std::to_string(report.pairs) + " pairs, " + std::to_string(passed) + " passed, " +
         std::to_string(failed) + " failed, " + std::to_string(indeterminate) + " indeterminate";
}

Outcome perfect_roman_soundness() {
  const SweepCorpus& c = sweep_corpus();
  VerifyOptions options;
  options.claims = {"PREDICT"};
  for (TheoremId id : all_theorem_ids()) {
    const std::string name(to_string(id));
    if (name.starts_with("PR_")) options.claims.insert(name);
  }
  options.lemma_max_order = 0;
  const CorpusReport report = verify_corpus(c.gs, c.hs, options);
  bool both_directions = true;
  for (const char* claim : {"PR_PERFECTROMAN_CHAR:=>", "PR_PERFECTROMAN_CHAR:<=",
                            "PR_EQ_ROMAN_CHAR:=>", "PR_EQ_ROMAN_CHAR:<="}) {
    const auto it = report.totals.find(claim);
    both_directions = both_directions && it != report.totals.end() && it->second.passed > 0;
  }
  return {report.failure_count() == 0 && report.pairs_skipped == 0 && both_directions,
          totals_line(report)};
}

Outcome structural_lemmas() {
  const SweepCorpus& c = sweep_corpus();
  int pairs = 0;
  int failures = 0;
  int records = 0;
  for (const Graph& g : c.gs) {
    for (const Graph& h : c.hs) {
      if (g.order() * h.order() > 12) continue;
      ++pairs;
      for (const ClaimRecord& r : check_structural_lemmas(g, h, 12)) {
        ++records;
        if (r.status != ClaimStatus::kPass) ++failures;
      }
    }
  }
  return {failures == 0 && pairs > 0, std::to_string(pairs) + " pairs, " +
                                          std::to_string(records) + " lemma checks, " +
                                          std::to_string(failures) + " failures"};
}

Outcome inequality_suite() {
  int graphs = 0;
  int checks = 0;
  int failures = 0;
  int trees = 0;
  for (const char* name :
       {"connected_2_5.g6", "all_2_4.g6", "all_1_7.g6", "all_8.g6", "trees_1_9.g6"}) {
    for (const Graph& g : corpus(name)) {
      ++graphs;
      for (const ClaimRecord& r : check_invariants(g)) {
        if (r.status == ClaimStatus::kNotApplicable || r.status == ClaimStatus::kSkipped) continue;
        ++checks;
        if (r.status != ClaimStatus::kPass) ++failures;
      }
    }
  }
  for (const Graph& t : corpus("trees_1_9.g6")) {
    ++trees;
    ++checks;
    if (solve(t, K::kGamma).value != solve(t, K::kRho).value) ++failures;
  }
  return {failures == 0, std::to_string(graphs) + " graphs, " + std::to_string(trees) +
                             " trees, " + std::to_string(checks) + " checks, " +
                             std::to_string(failures) + " failures"};
}

Outcome oracle_equivalence() {
  int graphs = 0;
  int mismatches = 0;
  std::string first;
  for (const char* name : {"all_1_7.g6", "all_8.g6"}) {
    for (const Graph& g : corpus(name)) {
      ++graphs;
      const auto want = oracle::roman_parameters(g);
      int got[3] = {solve(g, K::kGammaR).value, solve(g, K::kGammaRp).value, -1};
      if (!first_isolated_vertex(g)) got[2] = solve(g, K::kGammaTR).value;
      for (int k = 0; k < 3; ++k) {
        if (got[k] != want[k]) {
          ++mismatches;
          if (first.empty()) first = write_graph6(g);
        }
      }
    }
  }
  return {mismatches == 0 && graphs > 0,
          std::to_string(graphs) + " graphs, " + std::to_string(mismatches) + " mismatches" +
              (first.empty() ? "" : " first " + first)};
}

struct Criterion {
  int number;
  const char* title;
  std::function<Outcome()> run;
};

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> list = {
      {1, "figure values", figure_values},
      {2, "figure 2 product law 6n(H)+3", figure_two_product_law},
      {3, "corona tightness", corona_tightness},
      {4, "closed formulas for gamma, gamma_R, gamma_p", closed_formula_sweep},
      {5, "gamma_Rp soundness and characterisations", perfect_roman_soundness},
      {6, "structural lemmas", structural_lemmas},
      {7, "inequality chains", inequality_suite},
      {8, "oracle equivalence for Roman parameters", oracle_equivalence},
  };
  return list;
}

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  if (argc > 1) only = std::atoi(argv[1]);
  bool all_pass = true;
  bool ran = false;
  for (const Criterion& c : criteria()) {
    if (only != 0 && c.number != only) continue;
    ran = true;
    const auto start = Clock::now();
    Outcome outcome;
    try {
      outcome = c.run();
    } catch (const std::exception& e) {
      outcome = {false, std::string("error: ") + e.what()};
    }
    all_pass = all_pass && outcome.pass;
    std::printf("%s criterion %d: %s [%s] (%.2fs)\n", outcome.pass ? "PASS" : "FAIL", c.number,
                c.title, outcome.detail.c_str(), seconds_since(start));
    std::fflush(stdout);
  }
  if (!ran) {
    std::fprintf(stderr, "usage: %s [1-8]\n", argv[0]);
    return 2;
  }
  return all_pass ? 0 : 1;
}
