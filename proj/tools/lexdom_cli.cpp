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

// lexdom: command-line front end.
//
//   lexdom solve   --param gamma_Rp --g6 'A_'
//   lexdom predict --param gamma_p --gG 'Ch' --gH 'A_'
//   lexdom product --gG 'Ch' --gH 'A_'
//   lexdom witness --theorem PR_UB_PACKING --fG 'path(4)' --fH 'empty(3)'
//   lexdom verify  --G connected.g6 --H all.g6 --workers 4
//   lexdom gen     --family 'corona(cycle(3),2)'

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "lexdom/errors.hpp"
#include "lexdom/formula.hpp"
#include "lexdom/graph_io.hpp"
#include "lexdom/product.hpp"
#include "lexdom/solvers.hpp"
#include "lexdom/verify.hpp"

namespace {

using nlohmann::json;
using namespace lexdom;

constexpr const char* kVersion = "1.0.0";

enum Exit {
  kOk = 0,
  kClaimFailed = 1,
  kUsage = 2,
  kParse = 3,
  kDomain = 4,
  kCapacity = 5,
  kPrecondition = 6,
  kInconsistent = 7,
};

// One graph given inline as graph6, inline as a family spec, or by file.
struct GraphInput {
  std::string g6;
  std::string family;
  std::string path;

  void add_options(CLI::App* cmd, const std::string& g6_flag, const std::string& family_flag,
                   const std::string& file_flag, const std::string& what) {
    auto* a = cmd->add_option(g6_flag, g6, what + " as graph6");
    auto* b = cmd->add_option(family_flag, family, what + " as a family spec, e.g. path(4)");
    auto* c = cmd->add_option(file_flag, path, what + " from a graph6 or edge-list file");
    a->excludes(b)->excludes(c);
    b->excludes(c);
  }

  Graph load() const {
    if (!g6.empty()) return parse_graph6(g6);
    if (!family.empty()) return generate(parse_family_spec(family));
    if (path.empty()) throw PreconditionError("no graph given");
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open " + path, 0);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_graph(buf.str());
  }

  json describe(const Graph& g) const {
    json j;
    j["graph6"] = write_graph6(g);
    if (!family.empty()) j["family"] = family;
    if (!path.empty()) j["file"] = path;
    return j;
  }
};

json witness_json(const Witness& w) {
  json j;
  if (const auto* s = std::get_if<VertexSet>(&w)) {
    j["vertices"] = s->vertices();
  } else {
    j["weights"] = std::get<RomanAssignment>(w).weights();
  }
  return j;
}

std::string witness_text(const Witness& w) {
  std::string out;
  if (const auto* s = std::get_if<VertexSet>(&w)) {
    for (int v : s->vertices()) out += (out.empty() ? "" : ",") + std::to_string(v);
  } else {
    for (int x : std::get<RomanAssignment>(w).weights()) out += std::to_string(x);
  }
  return out;
}

// Unknown names on the command line.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

ParameterKind parse_kind(const std::string& name) {
  if (auto kind = parse_parameter_kind(name)) return *kind;
  throw UsageError("unknown parameter '" + name + "'");
}

json finding_json(const Finding& f) {
  return json{{"id", label(f)}, {"relation", to_string(f.relation)}, {"value", f.value},
              {"facts", f.facts}};
}

json record_json(const ClaimRecord& r) {
  json j{{"claim", r.claim}, {"status", to_string(r.status)}};
  if (!r.branch.empty()) j["branch"] = r.branch;
  if (!r.predicted.empty()) j["predicted"] = r.predicted;
  if (!r.measured.empty()) j["measured"] = r.measured;
  if (!r.detail.empty()) j["detail"] = r.detail;
  if (!r.witnesses.empty()) j["witnesses"] = r.witnesses;
  return j;
}

json totals_json(const CorpusReport& report) {
  json totals = json::object();
  for (const auto& [claim, t] : report.totals) {
    totals[claim] = {{"applicable", t.applicable}, {"passed", t.passed},
                     {"failed", t.failed},         {"indeterminate", t.indeterminate},
                     {"not_applicable", t.not_applicable}, {"skipped", t.skipped}};
  }
  return totals;
}

struct Config {
  SolverLimits limits;
  bool tsv = false;
  bool timing = false;
};

void emit(const Config& config, const std::string& command, json inputs, json results,
          const std::string& tsv, double seconds) {
  if (config.tsv) {
    std::cout << tsv;
    return;
  }
  json out{{"version", kVersion}, {"command", command}, {"inputs", std::move(inputs)},
           {"results", std::move(results)}};
  if (config.timing) out["timing"] = {{"seconds", seconds}};
  std::cout << out.dump(2) << "\n";
}

int exit_code_for(const std::exception_ptr& error, std::string& message) {
  try {
    std::rethrow_exception(error);
  } catch (const ParseError& e) {
    message = "parse error: " + std::string(e.what());
    return kParse;
  } catch (const DomainError& e) {
    message = "domain error: " + std::string(e.what());
    return kDomain;
  } catch (const CapacityError& e) {
    message = "capacity error: " + std::string(e.what());
    return kCapacity;
  } catch (const PreconditionError& e) {
    message = "precondition error: " + std::string(e.what());
    return kPrecondition;
  } catch (const InconsistencyError& e) {
    message = "inconsistency: " + std::string(e.what());
    return kInconsistent;
  } catch (const UsageError& e) {
    message = "usage error: " + std::string(e.what());
    return kUsage;
  } catch (const std::exception& e) {
    message = e.what();
    return kUsage;
  }
}

int scan_cap_from_env(int fallback) {
  const char* env = std::getenv("LEXDOM_MAX_N");
  if (env == nullptr || *env == '\0') return fallback;
  try {
    const int value = std::stoi(env);
    if (value > 0) return value;
  } catch (const std::exception&) {
  }
  throw PreconditionError(std::string("LEXDOM_MAX_N must be a positive integer, got '") + env +
                          "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact domination parameters of lexicographic products"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  Config config;
  int max_n = 0;
  int max_ternary = config.limits.max_ternary_order;
  app.add_option("--max-n", max_n, "subset-search order cap (default 26, env LEXDOM_MAX_N)")
      ->check(CLI::PositiveNumber);
  app.add_option("--max-ternary", max_ternary, "order cap for 3^n searches")
      ->check(CLI::PositiveNumber);
  app.add_flag("--tsv", config.tsv, "tab-separated output instead of JSON");
  app.add_flag("--timing", config.timing, "add wall-clock seconds to the JSON output");

  std::string param;
  std::string theorem;
  GraphInput one;
  GraphInput g_in;
  GraphInput h_in;
  std::string format = "g6";

  auto* solve_cmd = app.add_subcommand("solve", "exact value and optimal witness");
  solve_cmd->add_option("--param", param, "gamma, gamma_t, gamma_p, rho, rho_o, gamma_R, "
                                          "gamma_Rp or gamma_tR")->required();
  one.add_options(solve_cmd, "--g6", "--family", "--in", "the graph");

  auto* predict_cmd = app.add_subcommand("predict", "closed-form value or bounds for G∘H");
  predict_cmd->add_option("--param", param, "gamma, gamma_p, gamma_R or gamma_Rp")->required();
  g_in.add_options(predict_cmd, "--gG", "--fG", "--inG", "factor G");
  h_in.add_options(predict_cmd, "--gH", "--fH", "--inH", "factor H");

  auto* product_cmd = app.add_subcommand("product", "build G∘H (vertex (u,v) is u*n(H)+v)");
  g_in.add_options(product_cmd, "--gG", "--fG", "--inG", "factor G");
  h_in.add_options(product_cmd, "--gH", "--fH", "--inH", "factor H");
  product_cmd->add_option("--format", format, "g6 or edges")
      ->check(CLI::IsMember({"g6", "edges"}));

  auto* witness_cmd = app.add_subcommand("witness", "constructive witness from a proof");
  witness_cmd->add_option("--theorem", theorem, "statement id, e.g. PR_UB_PACKING")->required();
  g_in.add_options(witness_cmd, "--gG", "--fG", "--inG", "factor G");
  h_in.add_options(witness_cmd, "--gH", "--fH", "--inH", "factor H");

  auto* verify_cmd = app.add_subcommand("verify", "check every statement over corpus pairs");
  std::vector<std::string> g_corpora;
  std::vector<std::string> h_corpora;
  std::vector<std::string> claims;
  VerifyOptions verify_options;
  bool invariants = false;
  bool all_records = false;
  verify_cmd->add_option("--G", g_corpora, "corpus files for G")->required();
  verify_cmd->add_option("--H", h_corpora, "corpus files for H")->required();
  verify_cmd->add_option("--claims", claims, "statement ids to check (default all)")
      ->delimiter(',');
  verify_cmd->add_option("--workers", verify_options.workers, "worker threads")
      ->check(CLI::PositiveNumber);
  verify_cmd->add_option("--max-product", verify_options.max_product_order,
                         "skip pairs with a larger product");
  verify_cmd->add_option("--lemma-max", verify_options.lemma_max_order,
                         "product order cap for the structural lemmas");
  verify_cmd->add_flag("--invariants", invariants,
                       "also check parameter chains on every G and H");
  verify_cmd->add_flag("--records", all_records, "list every record of every pair");

  auto* gen_cmd = app.add_subcommand("gen", "generate a graph from a family spec");
  std::string family;
  gen_cmd->add_option("--family", family, "e.g. corona(cycle(3),2)")->required();
  gen_cmd->add_option("--format", format, "g6 or edges")->check(CLI::IsMember({"g6", "edges"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  const auto start = std::chrono::steady_clock::now();
  auto elapsed = [&] {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  };

  try {
    config.limits.max_scan_order = max_n > 0 ? max_n : scan_cap_from_env(26);
    config.limits.max_ternary_order = max_ternary;

    if (*solve_cmd) {
      const Graph g = one.load();
      const ParameterKind kind = parse_kind(param);
      const SolveResult r = solve(g, kind, config.limits);
      json results{{"param", to_string(kind)}, {"value", r.value},
                   {"witness", witness_json(r.witness)}};
      emit(config, "solve", json{{"graph", one.describe(g)}}, results,
           std::string(to_string(kind)) + "\t" + std::to_string(r.value) + "\t" +
               witness_text(r.witness) + "\n",
           elapsed());
      return kOk;
    }

    if (*predict_cmd) {
      const Graph g = g_in.load();
      const Graph h = h_in.load();
      const ParameterKind kind = parse_kind(param);
      const Prediction p = predict(g, h, kind, config.limits);
      json results{{"param", to_string(kind)}};
      if (p.exact()) {
        results["exact"] = p.lo;
      } else {
        results["lo"] = p.lo;
        results["hi"] = p.hi;
      }
      std::vector<std::string> labels;
      json findings = json::array();
      for (const Finding& f : p.provenance) {
        labels.push_back(label(f));
        findings.push_back(finding_json(f));
      }
      results["provenance"] = labels;
      results["findings"] = findings;
      std::string tsv = std::string(to_string(kind)) + "\t" + std::to_string(p.lo) + "\t" +
                        std::to_string(p.hi) + "\t";
      for (std::size_t i = 0; i < labels.size(); ++i) tsv += (i ? "," : "") + labels[i];
      emit(config, "predict", json{{"G", g_in.describe(g)}, {"H", h_in.describe(h)}}, results,
           tsv + "\n", elapsed());
      return kOk;
    }

    if (*product_cmd) {
      const Graph g = g_in.load();
      const Graph h = h_in.load();
      const LexProduct p = lex_product(g, h);
      const std::string text =
          format == "g6" ? write_graph6(p.graph) : write_edge_list(p.graph);
      json results{{"order", p.graph.order()}, {"edges", p.graph.edge_count()},
                   {"index", "u*n(H)+v"}, {format == "g6" ? "graph6" : "edge_list", text}};
      emit(config, "product", json{{"G", g_in.describe(g)}, {"H", h_in.describe(h)}}, results,
           format == "g6" ? text + "\n" : text, elapsed());
      return kOk;
    }

    if (*witness_cmd) {
      const auto id = parse_theorem_id(theorem);
      if (!id) throw UsageError("unknown statement id '" + theorem + "'");
      const Graph g = g_in.load();
      const Graph h = h_in.load();
      const ConstructedWitness w = construct_witness(*id, g, h, config.limits);
      json results{{"theorem", to_string(w.id)}, {"param", to_string(w.kind)},
                   {"weight", w.weight},         {"bound", w.bound},
                   {"product_order", w.product.graph.order()},
                   {"witness", witness_json(w.witness)}};
      if (!w.branch.empty()) results["branch"] = w.branch;
      emit(config, "witness", json{{"G", g_in.describe(g)}, {"H", h_in.describe(h)}}, results,
           std::string(to_string(w.id)) + "\t" + std::to_string(w.weight) + "\t" +
               witness_text(w.witness) + "\n",
           elapsed());
      return kOk;
    }

    if (*verify_cmd) {
      std::vector<Graph> gs;
      std::vector<Graph> hs;
      for (const std::string& p : g_corpora) {
        for (Graph& g : load_corpus(p)) gs.push_back(std::move(g));
      }
      for (const std::string& p : h_corpora) {
        for (Graph& h : load_corpus(p)) hs.push_back(std::move(h));
      }
      for (const std::string& c : claims) {
        if (c != "PREDICT" && !parse_theorem_id(c)) {
          throw UsageError("unknown claim '" + c + "'");
        }
        verify_options.claims.insert(c);
      }
      verify_options.limits = config.limits;
      CorpusReport report = verify_corpus(gs, hs, verify_options);
      if (invariants) {
        for (const auto* corpus : {&gs, &hs}) {
          for (const Graph& g : *corpus) add_records(report, check_invariants(g, config.limits));
        }
      }
      json failures = json::array();
      for (const PairReport& pr : report.failures) {
        json recs = json::array();
        for (const ClaimRecord& r : pr.records) {
          if (r.status == ClaimStatus::kFail) recs.push_back(record_json(r));
        }
        failures.push_back({{"G", pr.g6_g}, {"H", pr.g6_h}, {"records", recs}});
      }
      json results{{"pairs", report.pairs},
                   {"pairs_skipped", report.pairs_skipped},
                   {"failures", report.failure_count()},
                   {"totals", totals_json(report)},
                   {"counterexamples", failures}};
      if (all_records) {
        json pairs = json::array();
        for (const Graph& g : gs) {
          for (const Graph& h : hs) {
            const PairReport pr = verify_pair(g, h, verify_options);
            json recs = json::array();
            for (const ClaimRecord& r : pr.records) recs.push_back(record_json(r));
            pairs.push_back({{"G", pr.g6_g}, {"H", pr.g6_h}, {"skipped", pr.skipped},
                             {"records", recs}});
          }
        }
        results["records"] = pairs;
      }
      std::string tsv =
          "claim\tapplicable\tpassed\tfailed\tindeterminate\tnot_applicable\tskipped\n";
      for (const auto& [claim, t] : report.totals) {
        tsv += claim + "\t" + std::to_string(t.applicable) + "\t" + std::to_string(t.passed) +
               "\t" + std::to_string(t.failed) + "\t" + std::to_string(t.indeterminate) + "\t" +
               std::to_string(t.not_applicable) + "\t" + std::to_string(t.skipped) + "\n";
      }
      json inputs{{"G", g_corpora}, {"H", h_corpora}, {"workers", verify_options.workers},
                  {"max_product", verify_options.max_product_order},
                  {"lemma_max", verify_options.lemma_max_order}};
      if (!claims.empty()) inputs["claims"] = claims;
      emit(config, "verify", inputs, results, tsv, elapsed());
      return report.failure_count() == 0 ? kOk : kClaimFailed;
    }

    if (*gen_cmd) {
      const GraphFamilySpec spec = parse_family_spec(family);
      const Graph g = generate(spec);
      const std::string text = format == "g6" ? write_graph6(g) : write_edge_list(g);
      json results{{"order", g.order()}, {"edges", g.edge_count()},
                   {format == "g6" ? "graph6" : "edge_list", text}};
      emit(config, "gen", json{{"family", to_string(spec)}}, results,
           format == "g6" ? text + "\n" : text, elapsed());
      return kOk;
    }
  } catch (...) {
    std::string message;
    const int code = exit_code_for(std::current_exception(), message);
    std::cerr << "lexdom: " << message << "\n";
    return code;
  }
  return kUsage;
}
