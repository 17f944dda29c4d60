/* Copyright 2026 The proofkit Authors.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>
#include <json.hpp>

#include "proofkit/nd_check.hpp"
#include "proofkit/proof_io.hpp"
#include "proofkit/seq_check.hpp"

namespace proofkit {
namespace {

struct CliResult {
  int status;
  std::string output;
};

CliResult run_cli(const std::string& args) {
  std::string command = std::string(PROOFKIT_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(command.c_str(), "r");
  EXPECT_NE(pipe, nullptr);
  std::string output;
  char buffer[4096];
  while (std::size_t n = fread(buffer, 1, sizeof buffer, pipe)) output.append(buffer, n);
  int raw = pclose(pipe);
  return {WEXITSTATUS(raw), output};
}

std::string golden(const std::string& name) {
  return std::string(PROOFKIT_GOLDEN_DIR) + "/" + name;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

TEST(Cli, CheckGoldenNd) {
  CliResult r = run_cli("check --calculus nd " + golden("imp_dneg.nd"));
  EXPECT_EQ(r.status, 0) << r.output;
  EXPECT_NE(r.output.find("ok: true"), std::string::npos);
}

TEST(Cli, CheckMalformedFailsWithViolationPath) {
  CliResult r = run_cli("check --calculus slt " + golden("malformed.slt"));
  EXPECT_EQ(r.status, 1);
  EXPECT_NE(r.output.find("violation:"), std::string::npos);
}

TEST(Cli, ParseErrorGivesUsageExit) {
  std::string bad = ::testing::TempDir() + "bad.slt";
  std::ofstream(bad) << "(rule wat)";
  CliResult r = run_cli("check --calculus slt " + bad);
  EXPECT_EQ(r.status, 2) << r.output;
  CliResult missing = run_cli("check --calculus slt /no/such/file.slt");
  EXPECT_EQ(missing.status, 2);
  CliResult usage = run_cli("frobnicate");
  EXPECT_EQ(usage.status, 2);
}

TEST(Cli, NormalizeIndirectEmitsRecheckableFile) {
  std::string out = ::testing::TempDir() + "norm.nd";
  CliResult r = run_cli("normalize --mode indirect " + golden("detour1.nd") + " --out " + out);
  ASSERT_EQ(r.status, 0) << r.output;
  NdDerivation d = parse_nd_derivation(slurp(out));
  EXPECT_TRUE(check_nd(d).ok());
  EXPECT_TRUE(is_normal(d));
  CliResult recheck = run_cli("check --calculus nd " + out);
  EXPECT_EQ(recheck.status, 0);
}

TEST(Cli, NormalizeDirectMatchesEnd) {
  CliResult r = run_cli("normalize --mode direct " + golden("detour1.nd"));
  ASSERT_EQ(r.status, 0) << r.output;
  EXPECT_NE(r.output.find("normal: true"), std::string::npos);
  EXPECT_NE(r.output.find("end: p -> ~~p"), std::string::npos);
}

TEST(Cli, TranslateRoundTripEmitsRecheckableFiles) {
  std::string slt_out = ::testing::TempDir() + "imp_dneg.slt";
  CliResult r =
      run_cli("translate --from nd --to slt " + golden("imp_dneg.nd") + " --out " + slt_out);
  ASSERT_EQ(r.status, 0) << r.output;
  SeqDerivation d = parse_seq_derivation(slurp(slt_out));
  EXPECT_TRUE(check_slt(d).ok());

  std::string cutfree = ::testing::TempDir() + "imp_dneg_cf.slt";
  CliResult elim =
      run_cli("cutelim --calculus slt " + slt_out + " --out " + cutfree);
  ASSERT_EQ(elim.status, 0) << elim.output;
  SeqDerivation cf = parse_seq_derivation(slurp(cutfree));
  EXPECT_TRUE(check_slt(cf).ok());
  EXPECT_TRUE(is_cut_free(cf));

  std::string nd_out = ::testing::TempDir() + "imp_dneg_back.nd";
  CliResult back =
      run_cli("translate --from slt --to nd " + cutfree + " --out " + nd_out);
  ASSERT_EQ(back.status, 0) << back.output;
  NdDerivation n = parse_nd_derivation(slurp(nd_out));
  EXPECT_TRUE(check_nd(n).ok());
  EXPECT_TRUE(is_normal(n));
}

TEST(Cli, EmitTraceIsValidJsonWithMatchingStepCount) {
  std::string trace_path = ::testing::TempDir() + "trace.json";
  CliResult r = run_cli("reduce --steps 100 " + golden("detour1.nd") + " --emit-trace " +
                        trace_path + " --out /dev/null");
  ASSERT_EQ(r.status, 0) << r.output;
  nlohmann::json trace = nlohmann::json::parse(slurp(trace_path));
  ASSERT_TRUE(trace.is_array());
  std::string needle = "steps: " + std::to_string(trace.size());
  EXPECT_NE(r.output.find(needle), std::string::npos) << r.output;
  for (const auto& step : trace) {
    EXPECT_TRUE(step.contains("case_id"));
    EXPECT_TRUE(step.contains("path"));
    NdDerivation d = parse_nd_derivation(step["derivation"].get<std::string>());
    EXPECT_TRUE(check_nd(d).ok());
  }
}

TEST(Cli, CutelimTraceIsValidJson) {
  std::string slt_out = ::testing::TempDir() + "ge_for_trace.slt";
  ASSERT_EQ(run_cli("translate --from nd --to slt " + golden("g_shift.nd") + " --out " + slt_out)
                .status,
            0);
  std::string trace_path = ::testing::TempDir() + "cutelim_trace.json";
  CliResult r = run_cli("cutelim --calculus slt " + slt_out + " --emit-trace " + trace_path +
                        " --out /dev/null");
  ASSERT_EQ(r.status, 0) << r.output;
  nlohmann::json trace = nlohmann::json::parse(slurp(trace_path));
  ASSERT_TRUE(trace.is_array());
  EXPECT_FALSE(trace.empty());
  std::string needle = "steps: " + std::to_string(trace.size());
  EXPECT_NE(r.output.find(needle), std::string::npos) << r.output;
  for (const auto& step : trace) EXPECT_TRUE(step.contains("kind"));
}

TEST(Cli, JsonReportMode) {
  CliResult r = run_cli("--json check --calculus nd " + golden("exmid.nd"));
  ASSERT_EQ(r.status, 0) << r.output;
  nlohmann::json report = nlohmann::json::parse(r.output);
  EXPECT_TRUE(report["ok"].get<bool>());
}

TEST(Cli, OracleVerdicts) {
  CliResult valid = run_cli("oracle --formula \"G p -> X X p\" --max-lasso 4");
  EXPECT_EQ(valid.status, 0) << valid.output;
  EXPECT_NE(valid.output.find("valid: true"), std::string::npos);
  CliResult invalid = run_cli("oracle --formula \"p -> G p\" --max-lasso 4");
  EXPECT_EQ(invalid.status, 1);
  EXPECT_NE(invalid.output.find("counterexample:"), std::string::npos);
}

TEST(Cli, IdentityEmitsRecheckableDerivation) {
  std::string out = ::testing::TempDir() + "identity.slt";
  CliResult r = run_cli("identity --formula \"F (p /\\\\ q)\" --index 2 --out " + out);
  ASSERT_EQ(r.status, 0) << r.output;
  SeqDerivation d = parse_seq_derivation(slurp(out));
  EXPECT_TRUE(check_slt(d).ok());
  CliResult recheck = run_cli("check --calculus slt " + out);
  EXPECT_EQ(recheck.status, 0);
}

TEST(Cli, FuelEnvironmentOverride) {
  std::string slt_out = ::testing::TempDir() + "for_fuel.slt";
  ASSERT_EQ(run_cli("translate --from nd --to slt " + golden("imp_dneg.nd") + " --out " + slt_out)
                .status,
            0);
  std::string command = std::string("PROOFKIT_FUEL=1 ") + PROOFKIT_CLI_PATH +
                        " cutelim --calculus slt " + slt_out + " 2>&1";
  FILE* pipe = popen(command.c_str(), "r");
  ASSERT_NE(pipe, nullptr);
  std::string output;
  char buffer[4096];
  while (std::size_t n = fread(buffer, 1, sizeof buffer, pipe)) output.append(buffer, n);
  int status = WEXITSTATUS(pclose(pipe));
  EXPECT_EQ(status, 1) << output;
  EXPECT_NE(output.find("fuel"), std::string::npos);
}

}  // namespace
}  // namespace proofkit
