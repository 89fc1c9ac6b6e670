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

#include <cstdint>
#include <random>

#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "lexdom/errors.hpp"
#include "lexdom/graph_io.hpp"
#include "support/fixtures.hpp"
#include "support/oracle.hpp"

namespace lexdom {
namespace {

using fixtures::family;
using testing::ElementsAre;
using K = ParameterKind;

std::uint64_t mask(const VertexSet& s) { return static_cast<std::uint64_t>(s.bits()); }

int value(const Graph& g, K kind) { return solve(g, kind).value; }

const std::vector<Graph>& small_corpus() {
  static const std::vector<Graph> gs =
      load_corpus(std::string(LEXDOM_TEST_DATA_DIR) + "/all_1_7.g6");
  return gs;
}

void expect_valid(const Graph& g, const SolveResult& r) {
  if (const auto* s = std::get_if<VertexSet>(&r.witness)) {
    EXPECT_TRUE(is_feasible(g, *s, r.kind));
    EXPECT_EQ(s->size(), r.value);
    return;
  }
  const auto& f = std::get<RomanAssignment>(r.witness);
  EXPECT_EQ(f.weight(), r.value);
  switch (r.kind) {
    case K::kGammaR: EXPECT_TRUE(is_roman_dominating(g, f)); break;
    case K::kGammaRp: EXPECT_TRUE(is_perfect_roman_dominating(g, f)); break;
    case K::kGammaTR: EXPECT_TRUE(is_total_roman_dominating(g, f)); break;
    default: ADD_FAILURE() << "set kind with a Roman witness";
  }
}

TEST(ParameterKindTest, NamesRoundTrip) {
  for (K k : {K::kGamma, K::kGammaT, K::kGammaP, K::kRho, K::kRhoO, K::kGammaR, K::kGammaRp,
              K::kGammaTR}) {
    EXPECT_EQ(parse_parameter_kind(to_string(k)), k);
  }
  EXPECT_EQ(parse_parameter_kind("gamma_x"), std::nullopt);
  EXPECT_TRUE(is_set_kind(K::kRhoO));
  EXPECT_FALSE(is_set_kind(K::kGammaR));
}

TEST(FeasibilityTest, Examples) {
  const Graph p4 = family("path(4)");
  const Graph c5 = family("cycle(5)");
  EXPECT_TRUE(is_feasible(p4, VertexSet::of(4, {1, 2}), K::kGammaP));
  EXPECT_FALSE(is_feasible(p4, VertexSet::of(4, {0, 2}), K::kGammaP));
  EXPECT_TRUE(is_feasible(p4, VertexSet::of(4, {0, 3}), K::kRho));
  EXPECT_TRUE(is_feasible(c5, VertexSet::of(5, {0, 1}), K::kRhoO));
  EXPECT_FALSE(is_feasible(c5, VertexSet::of(5, {0, 2}), K::kRhoO));
  EXPECT_THROW(is_feasible(p4, VertexSet::of(4, {1}), K::kGammaR), PreconditionError);
}

TEST(SolveTest, PathValues) {
  const Graph p4 = family("path(4)");
  EXPECT_EQ(value(p4, K::kGamma), 2);
  EXPECT_EQ(value(p4, K::kGammaT), 2);
  EXPECT_EQ(value(p4, K::kGammaP), 2);
  EXPECT_EQ(value(p4, K::kRho), 2);
  EXPECT_EQ(value(p4, K::kGammaR), 3);
  EXPECT_EQ(value(p4, K::kGammaRp), 3);
}

TEST(SolveTest, FigureOne) {
  const Graph g = fixtures::figure1();
  EXPECT_EQ(value(g, K::kGammaR), 4);
  EXPECT_EQ(value(g, K::kGammaRp), 4);
}

TEST(SolveTest, FigureTwo) {
  const Graph g = fixtures::figure2();
  EXPECT_EQ(value(g, K::kGamma), 3);
  EXPECT_EQ(value(g, K::kGammaR), 6);
  EXPECT_EQ(value(g, K::kGammaP), 6);
  EXPECT_EQ(value(g, K::kGammaRp), 9);
}

TEST(SolveTest, TieBreakIsSmallestMask) {
  const auto r = solve(family("complete(2)"), K::kGammaRp);
  EXPECT_EQ(r.value, 2);
  EXPECT_THAT(std::get<RomanAssignment>(r.witness).weights(), ElementsAre(1, 1));
  const auto d = solve(family("path(4)"), K::kGamma);
  EXPECT_EQ(std::get<VertexSet>(d.witness), VertexSet::of(4, {0, 2}));
}

TEST(SolveTest, Errors) {
  const Graph n2 = family("empty(2)");
  EXPECT_THROW(solve(n2, K::kGammaT), DomainError);
  EXPECT_THROW(solve(n2, K::kGammaTR), DomainError);
  EXPECT_NO_THROW(solve(n2, K::kGamma));
  SolverLimits tight;
  tight.max_scan_order = 5;
  EXPECT_THROW(solve(family("path(6)"), K::kGamma, tight), CapacityError);
  tight.max_ternary_order = 3;
  EXPECT_THROW(solve(family("path(4)"), K::kGammaTR, tight), CapacityError);
  try {
    solve(build_graph(3, {{0, 1}}), K::kGammaT);
    FAIL();
  } catch (const DomainError& e) {
    EXPECT_THAT(e.what(), testing::HasSubstr("2"));
  }
}

TEST(SolveTest, MatchesOracleOnSmallGraphs) {
  for (const Graph& g : small_corpus()) {
    EXPECT_EQ(value(g, K::kGamma), oracle::set_parameter(g, oracle::SetKind::kGamma));
    EXPECT_EQ(value(g, K::kGammaP), oracle::set_parameter(g, oracle::SetKind::kGammaP));
    EXPECT_EQ(value(g, K::kRho), oracle::set_parameter(g, oracle::SetKind::kRho));
    EXPECT_EQ(value(g, K::kRhoO), oracle::set_parameter(g, oracle::SetKind::kRhoO));
    EXPECT_EQ(value(g, K::kGammaR), oracle::roman_parameter(g, oracle::RomanKind::kRoman));
    EXPECT_EQ(value(g, K::kGammaRp), oracle::roman_parameter(g, oracle::RomanKind::kPerfect));
    if (!first_isolated_vertex(g)) {
      EXPECT_EQ(value(g, K::kGammaT), oracle::set_parameter(g, oracle::SetKind::kGammaT));
      EXPECT_EQ(value(g, K::kGammaTR), oracle::roman_parameter(g, oracle::RomanKind::kTotal));
    }
  }
}

TEST(SolveTest, WitnessesAreValid) {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 10);
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) {
        if (rng() % 3 == 0) edges.push_back({u, v});
      }
    }
    const Graph g = build_graph(n, edges);
    for (K k : {K::kGamma, K::kGammaP, K::kRho, K::kRhoO, K::kGammaR, K::kGammaRp}) {
      expect_valid(g, solve(g, k));
    }
    if (!first_isolated_vertex(g)) {
      expect_valid(g, solve(g, K::kGammaT));
      expect_valid(g, solve(g, K::kGammaTR));
    }
  }
}

TEST(ForcedCompletionTest, WeightsFollowV2) {
  const Graph p4 = family("path(4)");
  const auto f = forced_completion(p4, bit(1), K::kGammaR);
  EXPECT_THAT(f.weights(), ElementsAre(0, 2, 0, 1));
  const auto p = forced_completion(family("complete(3)"), bit(0) | bit(1), K::kGammaRp);
  EXPECT_THAT(p.weights(), ElementsAre(2, 2, 1));
}

TEST(OptimalV2Test, Examples) {
  const auto p4 = enumerate_optimal_v2(family("path(4)"), K::kGammaR);
  ASSERT_FALSE(p4.empty());
  for (const auto& s : p4) {
    ASSERT_EQ(s.size(), 1);
    EXPECT_EQ(family("path(4)").degree(s.vertices()[0]), 2);
  }
  EXPECT_THAT(enumerate_optimal_v2(family("complete(3)"), K::kGammaR),
              ElementsAre(VertexSet::of(3, {0}), VertexSet::of(3, {1}), VertexSet::of(3, {2})));
  const auto n2 = enumerate_optimal_v2(family("empty(2)"), K::kGammaR);
  ASSERT_EQ(n2.size(), 1U);
  EXPECT_TRUE(n2[0].empty());
  EXPECT_EQ(forced_completion(family("empty(2)"), 0, K::kGammaR).weight(), 2);
}

TEST(OptimalV2Test, MatchesOracle) {
  for (const Graph& g : small_corpus()) {
    for (auto [kind, rk] : {std::pair{K::kGammaR, oracle::RomanKind::kRoman},
                            std::pair{K::kGammaRp, oracle::RomanKind::kPerfect}}) {
      std::vector<std::uint64_t> got;
      for (const auto& s : enumerate_optimal_v2(g, kind)) got.push_back(mask(s));
      EXPECT_EQ(got, oracle::optimal_v2(g, rk));
    }
  }
}

TEST(OptimalSetsTest, AreFeasibleAndOptimal) {
  const Graph c6 = family("cycle(6)");
  const auto sets = enumerate_optimal_sets(c6, K::kGamma);
  EXPECT_EQ(sets.size(), 3U);
  for (const auto& s : sets) {
    EXPECT_TRUE(is_feasible(c6, s, K::kGamma));
    EXPECT_EQ(s.size(), 2);
  }
  EXPECT_TRUE(std::is_sorted(sets.begin(), sets.end(), mask_less));
}

TEST(OpenPackingsTest, IncludesEmptySetAndAllAreOpenPackings) {
  const Graph p4 = family("path(4)");
  const auto packs = enumerate_open_packings(p4);
  ASSERT_FALSE(packs.empty());
  EXPECT_TRUE(packs.front().empty());
  const auto adj = oracle::adjacency(p4);
  int count = 0;
  for (std::uint64_t s = 0; s < 16; ++s) count += oracle::open_packing(adj, s) ? 1 : 0;
  EXPECT_EQ(static_cast<int>(packs.size()), count);
  for (const auto& s : packs) EXPECT_TRUE(oracle::open_packing(adj, mask(s)));
}

TEST(ZetaTest, Examples) {
  const auto k2 = zeta(family("complete(2)"));
  EXPECT_EQ(k2.value, 3);
  EXPECT_TRUE(k2.couple.a.empty());
  EXPECT_EQ(k2.couple.b, VertexSet::of(2, {0}));
  const auto p4 = zeta(family("path(4)"));
  EXPECT_EQ(p4.value, 4);
  EXPECT_EQ(p4.couple.a, VertexSet::of(4, {1, 2}));
  EXPECT_TRUE(p4.couple.b.empty());
  EXPECT_EQ(zeta(family("complete(3)")).value, oracle::zeta(family("complete(3)")));
  EXPECT_THROW(zeta(family("empty(2)")), DomainError);
}

TEST(ZetaTest, MatchesOracle) {
  for (const Graph& g : small_corpus()) {
    if (first_isolated_vertex(g)) continue;
    const auto z = zeta(g);
    EXPECT_EQ(z.value, oracle::zeta(g));
    EXPECT_EQ(2 * z.couple.a.size() + 3 * z.couple.b.size(), z.value);
    for (const auto& c : enumerate_zeta_couples(g)) {
      EXPECT_EQ(2 * c.a.size() + 3 * c.b.size(), z.value);
    }
  }
}

TEST(ZetaPrimeTest, Examples) {
  const auto p4 = zeta_prime(family("path(4)"));
  ASSERT_TRUE(p4.has_value());
  EXPECT_EQ(p4->value, 4);
  EXPECT_FALSE(zeta_prime(family("cycle(5)")).has_value());
  const auto k2 = zeta_prime(family("complete(2)"));
  ASSERT_TRUE(k2.has_value());
  EXPECT_EQ(k2->value, 4);
}

TEST(ZetaPrimeTest, MatchesOracle) {
  for (const Graph& g : small_corpus()) {
    const auto got = zeta_prime(g);
    const auto want = oracle::zeta_prime(g);
    ASSERT_EQ(got.has_value(), want.has_value());
    if (got) EXPECT_EQ(got->value, *want);
  }
}

}  // namespace
}  // namespace lexdom
