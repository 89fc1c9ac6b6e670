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

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "json.hpp"

namespace {

using json = nlohmann::json;
using testing::HasSubstr;

struct CliResult {
  int status;
  std::string out;
};

CliResult run(const std::string& args, const std::string& env = "") {
  const std::string command = env + " '" LEXDOM_CLI_PATH "' " + args + " 2>/dev/null";
  FILE* pipe = popen(command.c_str(), "r");
  if (pipe == nullptr) return {-1, ""};
  std::string out;
  std::array<char, 4096> buffer{};
  std::size_t n = 0;
  while ((n = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) out.append(buffer.data(), n);
  const int raw = pclose(pipe);
  return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

std::string data(const char* name) { return std::string(LEXDOM_TEST_DATA_DIR) + "/" + name; }

std::string temp_file(const char* name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << content;
  return path.string();
}

TEST(CliTest, SolvePerfectRomanOfEdge) {
  const CliResult r = run("solve --param gamma_Rp --g6 A_");
  ASSERT_EQ(r.status, 0);
  const json j = json::parse(r.out);
  EXPECT_EQ(j["version"], "1.0.0");
  EXPECT_EQ(j["command"], "solve");
  EXPECT_TRUE(j.contains("inputs"));
  EXPECT_EQ(j["results"]["param"], "gamma_Rp");
  EXPECT_EQ(j["results"]["value"], 2);
  EXPECT_EQ(j["results"]["witness"]["weights"], json::array({1, 1}));
  EXPECT_FALSE(j.contains("timing"));
}

TEST(CliTest, SolvePacking) {
  const CliResult r = run("solve --param rho --g6 Ch");
  ASSERT_EQ(r.status, 0);
  EXPECT_EQ(json::parse(r.out)["results"]["value"], 2);
}

TEST(CliTest, SolveFromFamilyAndEdgeListFile) {
  const CliResult fam = run("solve --param gamma --family 'cycle(6)'");
  ASSERT_EQ(fam.status, 0);
  EXPECT_EQ(json::parse(fam.out)["results"]["value"], 2);
  const std::string path = temp_file("lexdom_cli_p4.txt", "4 3\n0 1\n1 2\n2 3\n");
  const CliResult file = run("solve --param gamma_R --in " + path);
  ASSERT_EQ(file.status, 0);
  EXPECT_EQ(json::parse(file.out)["results"]["value"], 3);
}

TEST(CliTest, ExitCodes) {
  EXPECT_EQ(run("solve --param gamma_t --g6 'A?'").status, 4);
  EXPECT_EQ(run("solve --param gamma --g6 'A '").status, 3);
  EXPECT_EQ(run("solve --param gamma --g6 Ch", "LEXDOM_MAX_N=3").status, 5);
  EXPECT_EQ(run("solve --param gamma_x --g6 Ch").status, 2);
  EXPECT_EQ(run("").status, 2);
  EXPECT_EQ(run("solve --g6 Ch").status, 2);
  EXPECT_EQ(run("predict --param gamma --gG 'A?' --gH A_").status, 4);
  EXPECT_EQ(run("witness --theorem ROMAN_GRAPH_COR --gG Ch --gH A_").status, 6);
}

TEST(CliTest, MaxNFlagOverridesEnvironment) {
  EXPECT_EQ(run("--max-n 4 solve --param gamma --g6 Ch", "LEXDOM_MAX_N=3").status, 0);
  EXPECT_EQ(run("solve --param gamma --g6 Ch", "LEXDOM_MAX_N=4").status, 0);
}

TEST(CliTest, PredictExact) {
  const CliResult r = run("predict --param gamma_p --gG Ch --gH A_");
  ASSERT_EQ(r.status, 0);
  const json j = json::parse(r.out)["results"];
  EXPECT_EQ(j["exact"], 2);
  ASSERT_EQ(j["provenance"].size(), 1U);
  EXPECT_EQ(j["provenance"][0], "GAMMAP_LEX:P2");
  EXPECT_EQ(j["findings"][0]["relation"], "exact");
}

TEST(CliTest, PredictInterval) {
  const CliResult r = run("predict --param gamma_Rp --gG Dhc --gH Bg");
  ASSERT_EQ(r.status, 0);
  const json j = json::parse(r.out)["results"];
  EXPECT_FALSE(j.contains("exact"));
  EXPECT_LT(j["lo"].get<int>(), j["hi"].get<int>());
  EXPECT_THAT(r.out, HasSubstr("PR_LB_GENERAL"));
}

TEST(CliTest, ProductAndGen) {
  const CliResult p = run("product --gG A_ --gH A_");
  ASSERT_EQ(p.status, 0);
  EXPECT_EQ(json::parse(p.out)["results"]["graph6"], "C~");
  const CliResult g = run("gen --family 'path(4)'");
  ASSERT_EQ(g.status, 0);
  EXPECT_EQ(json::parse(g.out)["results"]["graph6"], "Ch");
}

TEST(CliTest, Witness) {
  const CliResult r = run("witness --theorem PR_UB_PACKING --gG Ch --gH 'B?'");
  ASSERT_EQ(r.status, 0);
  const json j = json::parse(r.out)["results"];
  EXPECT_EQ(j["weight"], 4);
  EXPECT_EQ(j["bound"], 4);
}

TEST(CliTest, VerifyFilterAndFullRun) {
  const std::string gs = data("connected_2_5.g6");
  const std::string hs = data("all_2_4.g6");
  const CliResult filtered = run("verify --G " + gs + " --H " + hs + " --claims ROMAN_GRAPH_COR");
  ASSERT_EQ(filtered.status, 0);
  const json f = json::parse(filtered.out)["results"];
  EXPECT_EQ(f["failures"], 0);
  for (const auto& [claim, totals] : f["totals"].items()) EXPECT_EQ(claim, "ROMAN_GRAPH_COR");

  const CliResult full = run("verify --G " + gs + " --H " + hs);
  ASSERT_EQ(full.status, 0);
  EXPECT_EQ(json::parse(full.out)["results"]["failures"], 0);
}

TEST(CliTest, VerifyCorruptCorpusFails) {
  const std::string bad = temp_file("lexdom_cli_bad.g6", "A_\nXX\n");
  const CliResult r = run("verify --G " + bad + " --H " + data("all_2_4.g6"));
  EXPECT_NE(r.status, 0);
  EXPECT_EQ(r.status, 3);
  EXPECT_EQ(run("verify --G /nonexistent/lexdom.g6 --H " + data("all_2_4.g6")).status, 3);
  EXPECT_EQ(run("verify --G " + data("all_2_4.g6") + " --H " + data("all_2_4.g6") +
                " --claims NOT_A_CLAIM")
                .status,
            2);
}

TEST(CliTest, OutputIsByteIdentical) {
  const std::string args = "verify --G " + data("connected_2_5.g6") + " --H " +
                           data("all_2_4.g6") + " --max-product 12 --records";
  const CliResult a = run(args);
  const CliResult b = run(args + " --workers 3");
  ASSERT_EQ(a.status, 0);
  ASSERT_EQ(b.status, 0);
  const CliResult again = run(args);
  EXPECT_EQ(a.out, again.out);
  const json ja = json::parse(a.out);
  json jb = json::parse(b.out);
  jb["inputs"]["workers"] = ja["inputs"]["workers"];
  EXPECT_EQ(ja.dump(), jb.dump());
}

TEST(CliTest, TimingIsSeparate) {
  const CliResult r = run("--timing solve --param gamma --g6 Ch");
  ASSERT_EQ(r.status, 0);
  const json j = json::parse(r.out);
  EXPECT_TRUE(j.contains("timing"));
  json canonical = j;
  canonical.erase("timing");
  EXPECT_EQ(canonical.dump(2) + "\n", run("solve --param gamma --g6 Ch").out);
}

TEST(CliTest, TsvProjection) {
  const CliResult r = run("--tsv solve --param rho --g6 Ch");
  ASSERT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "rho\t2\t0,3\n");
}

}  // namespace
