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

#include "lexdom/verify.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <exception>
#include <mutex>
#include <optional>
#include <thread>
#include <tuple>

#include "lexdom/errors.hpp"
#include "lexdom/graph_io.hpp"
#include "lexdom/product.hpp"
#include "lexdom/roman.hpp"

namespace lexdom {
namespace {

constexpr std::array<ParameterKind, 4> kProductKinds{
    ParameterKind::kGamma, ParameterKind::kGammaP, ParameterKind::kGammaR,
    ParameterKind::kGammaRp};

std::string describe(const Witness& w) {
  if (const auto* s = std::get_if<VertexSet>(&w)) {
    std::string out = "{";
    for (int v : s->vertices()) out += (out.size() > 1 ? "," : "") + std::to_string(v);
    return out + "}";
  }
  std::string out = "[";
  for (int x : std::get<RomanAssignment>(w).weights()) {
    out += (out.size() > 1 ? "," : "") + std::to_string(x);
  }
  return out + "]";
}

std::string interval(int lo, int hi) {
  if (lo == hi) return std::to_string(lo);
  return "[" + std::to_string(lo) + "," + std::to_string(hi) + "]";
}

struct Measured {
  SolveResult gamma;
  SolveResult gamma_p;
  SolveResult gamma_R;
  SolveResult gamma_Rp;

  const SolveResult& of(ParameterKind kind) const {
    switch (kind) {
      case ParameterKind::kGamma: return gamma;
      case ParameterKind::kGammaP: return gamma_p;
      case ParameterKind::kGammaR: return gamma_R;
      default: return gamma_Rp;
    }
  }
};

class PairChecker {
 public:
  PairChecker(const FactorProfile& g, const FactorProfile& h, const VerifyOptions& options,
              const LexProduct& product, const Measured& m)
      : g_(g), h_(h), options_(options), product_(product), m_(m) {}

  std::vector<ClaimRecord> run() {
    for (ParameterKind kind : kProductKinds) {
      check_findings(kind);
      check_prediction(kind);
    }
    check_roman_graph();
    check_iff(TheoremId::kPrEqFactor, eq_factor_condition(g_, h_),
              m_.gamma_Rp.value == g_.gamma_Rp, "gamma_Rp(G)", g_.gamma_Rp);
    check_iff(TheoremId::kPrEq2Gamma, eq_2gamma_condition(g_, h_),
              m_.gamma_Rp.value == 2 * g_.gamma, "2gamma(G)", 2 * g_.gamma);
    check_perfect_roman();
    check_roman_equality();
    return std::move(records_);
  }

 private:
  bool selected(TheoremId id) const { return claim_selected(options_, to_string(id)); }

  std::vector<std::string> replay(ParameterKind kind, const std::string& facts) const {
    std::vector<std::string> out;
    out.push_back("G=" + write_graph6(g_.graph) + " H=" + write_graph6(h_.graph));
    out.push_back(std::string(to_string(kind)) + "(G∘H) optimum " +
                  describe(m_.of(kind).witness));
    if (!facts.empty()) out.push_back("facts: " + facts);
    return out;
  }

  void add(std::string claim, std::string branch, bool pass, std::string predicted,
           std::string measured, std::string detail, ParameterKind kind) {
    ClaimRecord r{std::move(claim), std::move(branch),
                  pass ? ClaimStatus::kPass : ClaimStatus::kFail,
                  std::move(predicted), std::move(measured), std::move(detail), {}};
    if (!pass) r.witnesses = replay(kind, r.detail);
    records_.push_back(std::move(r));
  }

  void add_status(std::string claim, std::string branch, ClaimStatus status,
                  std::string detail) {
    records_.push_back({std::move(claim), std::move(branch), status, "", "",
                        std::move(detail), {}});
  }

  void check_findings(ParameterKind kind) {
    const Evaluation ev = evaluate_theorems(g_, h_, kind);
    const int value = m_.of(kind).value;
    for (const Finding& f : ev.findings) {
      // The iff statements are checked by direction below.
      if (f.id == TheoremId::kPrEqFactor || f.id == TheoremId::kPrEq2Gamma) continue;
      if (!selected(f.id)) continue;
      bool pass = false;
      std::string predicted;
      switch (f.relation) {
        case Relation::kExact: pass = value == f.value; predicted = "=" ; break;
        case Relation::kLower: pass = value >= f.value; predicted = ">="; break;
        case Relation::kUpper: pass = value <= f.value; predicted = "<="; break;
        case Relation::kNotEqual: pass = value != f.value; predicted = "!="; break;
      }
      add(std::string(to_string(f.id)), f.branch, pass, predicted + std::to_string(f.value),
          std::to_string(value), f.facts, kind);
    }
    for (const TheoremSkip& s : ev.skipped) {
      if (s.id == TheoremId::kPrEqFactor || s.id == TheoremId::kPrEq2Gamma) continue;
      if (!selected(s.id)) continue;
      add_status(std::string(to_string(s.id)), "", ClaimStatus::kNotApplicable, s.reason);
    }
  }

  void check_prediction(ParameterKind kind) {
    if (!claim_selected(options_, "PREDICT")) return;
    const std::string claim = "PREDICT:" + std::string(to_string(kind));
    const int value = m_.of(kind).value;
    try {
      const Prediction p = predict(g_, h_, kind);
      std::string prov;
      for (const Finding& f : p.provenance) prov += (prov.empty() ? "" : " ") + label(f);
      add(claim, p.exact() ? "exact" : "interval", p.lo <= value && value <= p.hi,
          interval(p.lo, p.hi), std::to_string(value), prov, kind);
    } catch (const DomainError& e) {
      add_status(claim, "", ClaimStatus::kNotApplicable, e.what());
    } catch (const InconsistencyError& e) {
      add(claim, "inconsistent", false, "", std::to_string(value), e.what(), kind);
    }
  }

  void check_roman_graph() {
    const TheoremId id = TheoremId::kRomanGraphCor;
    if (!selected(id)) return;
    const std::string name(to_string(id));
    if (g_.has_isolated) {
      return add_status(name, "", ClaimStatus::kNotApplicable, "G has an isolated vertex");
    }
    if (h_.max_degree == h_.order - 2) {
      return add_status(name, "", ClaimStatus::kNotApplicable, "Delta(H) = n(H)-2");
    }
    const int twice = 2 * m_.gamma.value;
    add(name, "", m_.gamma_R.value == twice, std::to_string(twice),
        std::to_string(m_.gamma_R.value), "gamma(G∘H)=" + std::to_string(m_.gamma.value),
        ParameterKind::kGammaR);
  }

  // `cond` is the characterising condition, `eq` the measured equality.
  void check_directions(TheoremId id, const std::string& branch, bool eq,
                        std::optional<bool> necessary, std::optional<bool> sufficient,
                        const std::string& detail, ParameterKind kind) {
    const std::string name(to_string(id));
    if (necessary) {
      if (eq) {
        add(name + ":=>", branch, *necessary, "condition", *necessary ? "holds" : "fails",
            detail, kind);
      } else {
        add_status(name + ":=>", branch, ClaimStatus::kNotApplicable, "equality fails");
      }
    }
    if (sufficient) {
      if (*sufficient) {
        add(name + ":<=", branch, eq, "equality", eq ? "holds" : "fails", detail, kind);
      } else {
        add_status(name + ":<=", branch, ClaimStatus::kNotApplicable, "condition fails");
      }
    } else if (necessary && *necessary) {
      add_status(name + ":<=", branch, ClaimStatus::kIndeterminate,
                 "no sufficiency statement covers this case");
    }
  }

  void check_iff(TheoremId id, std::optional<bool> cond, bool eq, const std::string& target,
                 int value) {
    if (!selected(id)) return;
    if (!cond) {
      return add_status(std::string(to_string(id)), "", ClaimStatus::kNotApplicable,
                        "standing hypotheses fail");
    }
    check_directions(id, "", eq, cond, cond,
                     "gamma_Rp(G∘H)=" + std::to_string(m_.gamma_Rp.value) + ", " + target +
                         "=" + std::to_string(value),
                     ParameterKind::kGammaRp);
  }

  void check_perfect_roman() {
    const TheoremId id = TheoremId::kPrPerfectRomanChar;
    if (!selected(id)) return;
    const auto cond = perfect_roman_condition(g_, h_);
    if (!cond) {
      return add_status(std::string(to_string(id)), "", ClaimStatus::kNotApplicable,
                        "G not connected nontrivial or H trivial");
    }
    const bool eq = m_.gamma_Rp.value == 2 * m_.gamma_p.value;
    check_directions(id, cond->branch, eq, cond->necessary, cond->sufficient,
                     "gamma_Rp(G∘H)=" + std::to_string(m_.gamma_Rp.value) +
                         ", gamma_p(G∘H)=" + std::to_string(m_.gamma_p.value),
                     ParameterKind::kGammaRp);
  }

  void check_roman_equality() {
    const TheoremId id = TheoremId::kPrEqRomanChar;
    if (!selected(id)) return;
    if (!g_.connected || g_.order < 2 || h_.order < 3) {
      return add_status(std::string(to_string(id)), "", ClaimStatus::kNotApplicable,
                        "G not connected nontrivial or n(H) < 3");
    }
    const auto cond = roman_equality_condition(g_, h_);
    if (!cond) {
      return add_status(std::string(to_string(id)), "", ClaimStatus::kSkipped,
                        "zeta(G) exceeds the 3^n cap");
    }
    const bool eq = m_.gamma_Rp.value == m_.gamma_R.value;
    check_directions(id, cond->branch, eq, cond->holds, cond->holds,
                     "gamma_Rp(G∘H)=" + std::to_string(m_.gamma_Rp.value) +
                         ", gamma_R(G∘H)=" + std::to_string(m_.gamma_R.value),
                     ParameterKind::kGammaRp);
  }

  const FactorProfile& g_;
  const FactorProfile& h_;
  const VerifyOptions& options_;
  const LexProduct& product_;
  const Measured& m_;
  std::vector<ClaimRecord> records_;
};

ClaimRecord lemma_record(TheoremId id, bool pass, std::string detail,
                         std::vector<std::string> witnesses) {
  ClaimRecord r{std::string(to_string(id)), "", pass ? ClaimStatus::kPass : ClaimStatus::kFail,
                "", "", std::move(detail), {}};
  if (!pass) r.witnesses = std::move(witnesses);
  return r;
}

void tally(std::map<std::string, ClaimTotals>& totals, const ClaimRecord& r) {
  ClaimTotals& t = totals[r.claim];
  switch (r.status) {
    case ClaimStatus::kPass: ++t.applicable, ++t.passed; break;
    case ClaimStatus::kFail: ++t.applicable, ++t.failed; break;
    case ClaimStatus::kIndeterminate: ++t.indeterminate; break;
    case ClaimStatus::kNotApplicable: ++t.not_applicable; break;
    case ClaimStatus::kSkipped: ++t.skipped; break;
  }
}

std::string base_claim(std::string_view claim) {
  return std::string(claim.substr(0, claim.find(':')));
}

}  // namespace

std::string_view to_string(ClaimStatus status) {
  switch (status) {
    case ClaimStatus::kPass: return "pass";
    case ClaimStatus::kFail: return "fail";
    case ClaimStatus::kIndeterminate: return "indeterminate";
    case ClaimStatus::kNotApplicable: return "not_applicable";
    case ClaimStatus::kSkipped: return "skipped";
  }
  return "?";
}

bool PairReport::failed() const {
  return std::any_of(records.begin(), records.end(),
                     [](const ClaimRecord& r) { return r.status == ClaimStatus::kFail; });
}

int CorpusReport::failure_count() const {
  int n = 0;
  for (const auto& [claim, t] : totals) n += t.failed;
  return n;
}

bool claim_selected(const VerifyOptions& options, std::string_view claim) {
  return options.claims.empty() || options.claims.count(base_claim(claim)) > 0;
}

PairReport verify_pair(const FactorProfile& g, const FactorProfile& h,
                       const VerifyOptions& options) {
  PairReport report;
  report.g6_g = write_graph6(g.graph);
  report.g6_h = write_graph6(h.graph);
  report.product_order = g.order * h.order;
  if (report.product_order > options.max_product_order) {
    report.skipped = true;
    report.skip_reason = "product order " + std::to_string(report.product_order) +
                         " exceeds budget " + std::to_string(options.max_product_order);
    return report;
  }
  const LexProduct product = lex_product(g.graph, h.graph);
  const Graph& pg = product.graph;
  const Measured m{solve(pg, ParameterKind::kGamma, options.limits),
                   solve(pg, ParameterKind::kGammaP, options.limits),
                   solve(pg, ParameterKind::kGammaR, options.limits),
                   solve(pg, ParameterKind::kGammaRp, options.limits)};
  report.records = PairChecker(g, h, options, product, m).run();

  const bool want_lemmas = claim_selected(options, "LEMMA_LAYER_DICHOTOMY") ||
                           claim_selected(options, "LEMMA_ROMAN_MAX_V2");
  if (want_lemmas) {
    if (report.product_order <= options.lemma_max_order && !g.has_isolated && h.order >= 2) {
      for (ClaimRecord& r : check_structural_lemmas(g.graph, h.graph, options.lemma_max_order,
                                                    options.limits)) {
        if (claim_selected(options, r.claim)) report.records.push_back(std::move(r));
      }
    } else {
      for (TheoremId id : {TheoremId::kLemmaLayerDichotomy, TheoremId::kLemmaRomanMaxV2}) {
        if (!claim_selected(options, to_string(id))) continue;
        report.records.push_back({std::string(to_string(id)), "",
                                  report.product_order > options.lemma_max_order
                                      ? ClaimStatus::kSkipped
                                      : ClaimStatus::kNotApplicable,
                                  "", "", "lemma needs no isolated vertex in G, nontrivial H "
                                          "and product order within the lemma cap",
                                  {}});
      }
    }
  }
  return report;
}

PairReport verify_pair(const Graph& g, const Graph& h, const VerifyOptions& options) {
  return verify_pair(FactorProfile::compute(g, options.limits),
                     FactorProfile::compute(h, options.limits), options);
}

std::vector<ClaimRecord> check_structural_lemmas(const Graph& g, const Graph& h, int max_order,
                                                 const SolverLimits& limits) {
  const ProductIndexMap map(g.order(), h.order());
  if (map.order() > max_order) {
    throw CapacityError("structural lemmas need product order <= " +
                        std::to_string(max_order) + ", got " + std::to_string(map.order()));
  }
  if (first_isolated_vertex(g) || h.order() < 2) {
    throw DomainError("structural lemmas need G without isolated vertices and H nontrivial");
  }
  const LexProduct product = lex_product(g, h);
  const Graph& pg = product.graph;
  std::vector<ClaimRecord> out;
  const std::string pair = "G=" + write_graph6(g) + " H=" + write_graph6(h);

  // Every optimal PRDF: a layer without 2s is all 0 or all 1.
  {
    bool ok = true;
    std::vector<std::string> bad{pair};
    int count = 0;
    for (const VertexSet& v2 : enumerate_optimal_v2(pg, ParameterKind::kGammaRp, limits)) {
      ++count;
      const RomanAssignment f = forced_completion(pg, v2.bits(), ParameterKind::kGammaRp);
      for (int x = 0; x < g.order(); ++x) {
        const Bits layer = map.layer_bits(x);
        if ((layer & f.level_bits(2)) != 0) continue;
        const Bits ones = layer & f.level_bits(1);
        if (ones != 0 && ones != layer) {
          ok = false;
          bad.push_back("layer " + std::to_string(x) + " of " + describe(Witness(f)));
        }
      }
    }
    out.push_back(lemma_record(TheoremId::kLemmaLayerDichotomy, ok,
                               std::to_string(count) + " optimal PRDFs", std::move(bad)));
  }

  // Every optimal RDF with |V2| maximum: A_f dominates G and B_f is empty.
  {
    const std::vector<VertexSet> v2s = enumerate_optimal_v2(pg, ParameterKind::kGammaR, limits);
    int max_v2 = 0;
    for (const VertexSet& v2 : v2s) max_v2 = std::max(max_v2, v2.size());
    bool ok = true;
    int count = 0;
    std::vector<std::string> bad{pair};
    for (const VertexSet& v2 : v2s) {
      if (v2.size() != max_v2) continue;
      ++count;
      const RomanAssignment f = forced_completion(pg, v2.bits(), ParameterKind::kGammaR);
      Bits a = 0;
      Bits b = 0;
      for (int x = 0; x < g.order(); ++x) {
        const Bits layer = map.layer_bits(x);
        if ((layer & f.level_bits(2)) != 0) {
          a |= bit(x);
        } else if ((layer & f.level_bits(1)) != 0) {
          b |= bit(x);
        }
      }
      if (closed_neighborhood_of(g, a) != g.all() || b != 0) {
        ok = false;
        bad.push_back(describe(Witness(f)));
      }
    }
    out.push_back(lemma_record(TheoremId::kLemmaRomanMaxV2, ok,
                               std::to_string(count) + " optimal RDFs with |V2|=" +
                                   std::to_string(max_v2),
                               std::move(bad)));
  }
  return out;
}

std::vector<ClaimRecord> check_invariants(const Graph& g, const SolverLimits& limits) {
  std::vector<ClaimRecord> out;
  auto value = [&](ParameterKind k) { return solve(g, k, limits).value; };
  auto chain = [&](std::string name, std::vector<std::pair<std::string, int>> terms) {
    bool ok = true;
    std::string shown;
    for (std::size_t i = 0; i < terms.size(); ++i) {
      if (i > 0) {
        shown += " <= ";
        if (terms[i - 1].second > terms[i].second) ok = false;
      }
      shown += terms[i].first + "=" + std::to_string(terms[i].second);
    }
    ClaimRecord r{std::move(name), "", ok ? ClaimStatus::kPass : ClaimStatus::kFail,
                  "", "", shown, {}};
    if (!ok) r.witnesses.push_back("G=" + write_graph6(g));
    out.push_back(std::move(r));
  };
  const int gamma = value(ParameterKind::kGamma);
  const int gamma_p = value(ParameterKind::kGammaP);
  const int rho = value(ParameterKind::kRho);
  const int rho_o = value(ParameterKind::kRhoO);
  const int gamma_R = value(ParameterKind::kGammaR);
  const int gamma_Rp = value(ParameterKind::kGammaRp);
  chain("CHAIN:rho<=gamma<=gamma_p", {{"rho", rho}, {"gamma", gamma}, {"gamma_p", gamma_p}});
  chain("CHAIN:gamma_R<=gamma_Rp<=2gamma_p",
        {{"gamma_R", gamma_R}, {"gamma_Rp", gamma_Rp}, {"2gamma_p", 2 * gamma_p}});
  chain("CHAIN:gamma_R<=2gamma", {{"gamma_R", gamma_R}, {"2gamma", 2 * gamma}});
  chain("CHAIN:rho<=rho_o", {{"rho", rho}, {"rho_o", rho_o}});
  if (!first_isolated_vertex(g)) {
    const int gamma_t = value(ParameterKind::kGammaT);
    chain("CHAIN:gamma<=gamma_t<=2gamma",
          {{"gamma", gamma}, {"gamma_t", gamma_t}, {"2gamma", 2 * gamma}});
    chain("CHAIN:rho_o<=gamma_t", {{"rho_o", rho_o}, {"gamma_t", gamma_t}});
    if (g.order() <= limits.max_ternary_order) {
      chain("CHAIN:gamma_R<=gamma_tR",
            {{"gamma_R", gamma_R}, {"gamma_tR", value(ParameterKind::kGammaTR)}});
    }
  }
  if (is_connected(g) && g.edge_count() == g.order() - 1) {
    ClaimRecord r{"TREE:gamma=rho", "", gamma == rho ? ClaimStatus::kPass : ClaimStatus::kFail,
                  std::to_string(gamma), std::to_string(rho), "", {}};
    if (gamma != rho) r.witnesses.push_back("G=" + write_graph6(g));
    out.push_back(std::move(r));
  }
  return out;
}

void add_records(CorpusReport& report, const std::vector<ClaimRecord>& records) {
  for (const ClaimRecord& r : records) tally(report.totals, r);
}

CorpusReport verify_corpus(const std::vector<Graph>& gs, const std::vector<Graph>& hs,
                           const VerifyOptions& options) {
  CorpusReport report;
  if (gs.empty() || hs.empty()) return report;
  const int workers = std::max(1, options.workers);

  auto parallel = [&](std::size_t count, auto&& body) {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    std::exception_ptr error;
    std::mutex error_mutex;
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < count; i = next++) {
          try {
            body(i);
          } catch (...) {
            std::lock_guard lock(error_mutex);
            if (!error) error = std::current_exception();
          }
        }
      });
    }
    for (std::thread& t : pool) t.join();
    if (error) std::rethrow_exception(error);
  };

  // Profiles are computed once per factor and shared read-only afterwards.
  std::vector<std::optional<FactorProfile>> gp(gs.size());
  std::vector<std::optional<FactorProfile>> hp(hs.size());
  std::vector<std::string> gp_error(gs.size());
  std::vector<std::string> hp_error(hs.size());
  parallel(gs.size() + hs.size(), [&](std::size_t i) {
    const bool is_g = i < gs.size();
    const std::size_t k = is_g ? i : i - gs.size();
    try {
      (is_g ? gp : hp)[k] = FactorProfile::compute(is_g ? gs[k] : hs[k], options.limits);
    } catch (const CapacityError& e) {
      (is_g ? gp_error : hp_error)[k] = e.what();
    }
  });

  const std::size_t total = gs.size() * hs.size();
  std::vector<PairReport> results(total);
  parallel(total, [&](std::size_t i) {
    const std::size_t a = i / hs.size();
    const std::size_t b = i % hs.size();
    if (!gp[a] || !hp[b]) {
      PairReport& r = results[i];
      r.g6_g = write_graph6(gs[a]);
      r.g6_h = write_graph6(hs[b]);
      r.product_order = gs[a].order() * hs[b].order();
      r.skipped = true;
      r.skip_reason = gp[a] ? hp_error[b] : gp_error[a];
      return;
    }
    results[i] = verify_pair(*gp[a], *hp[b], options);
  });

  for (PairReport& r : results) {
    ++report.pairs;
    if (r.skipped) {
      ++report.pairs_skipped;
      continue;
    }
    add_records(report, r.records);
    if (r.failed()) report.failures.push_back(std::move(r));
  }
  std::sort(report.failures.begin(), report.failures.end(),
            [](const PairReport& x, const PairReport& y) {
              return std::tie(x.g6_g, x.g6_h) < std::tie(y.g6_g, y.g6_h);
            });
  return report;
}

}  // namespace lexdom
