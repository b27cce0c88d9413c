// Copyright 2026 The symbreak Authors
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

#include <algorithm>
#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "gtest/gtest.h"

namespace {

struct Result {
  int exit_code = -1;
  std::string out;
};

Result RunCli(const std::string& args) {
  const std::string command =
      std::string(SYMBREAK_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(command.c_str(), "r");
  Result result;
  if (pipe == nullptr) return result;
  std::array<char, 4096> buffer;
  std::size_t read;
  while ((read = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) {
    result.out.append(buffer.data(), read);
  }
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

int CountLines(const std::string& text) {
  return static_cast<int>(std::count(text.begin(), text.end(), '\n'));
}

TEST(CliTest, GenCountsConnectedGraphs) {
  const Result r = RunCli("gen --max-order 5 --min-order 5 --connected");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(CountLines(r.out), 21);
}

TEST(CliTest, GenRejectsLargeOrder) {
  EXPECT_EQ(RunCli("gen --max-order 7 --connected").exit_code, 2);
}

TEST(CliTest, VerifyPassExitsZero) {
  const Result r = RunCli("verify --theorem thm-3.3 --builtin 4");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_NE(r.out.find("\"failed\": 0"), std::string::npos);
}

TEST(CliTest, VerifyCounterexampleExitsOne) {
  EXPECT_EQ(RunCli("verify --theorem cor-3.5 --builtin 3").exit_code, 1);
}

TEST(CliTest, VerifyUsageErrors) {
  EXPECT_EQ(RunCli("verify --theorem thm-9.9 --builtin 4").exit_code, 2);
  EXPECT_EQ(RunCli("verify --theorem thm-3.3").exit_code, 2);
  EXPECT_EQ(RunCli("verify --theorem thm-3.3 --corpus /nonexistent.g6").exit_code,
            2);
  EXPECT_EQ(RunCli("verify --theorem thm-3.3 --builtin 4 --format xml").exit_code,
            2);
  EXPECT_EQ(RunCli("frobnicate").exit_code, 2);
}

TEST(CliTest, VerifyTsv) {
  const Result r = RunCli("verify --theorem thm-4.5 --builtin 3 --format tsv");
  EXPECT_EQ(r.exit_code, 0);
  // Comment line, header, then one row per connected graph of order <= 3.
  EXPECT_EQ(CountLines(r.out), 2 + 4);
}

TEST(CliTest, TransformSubdivision) {
  const Result r = RunCli("transform --op subdivision --graph6 Bw");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.out, "EEh_\n");
}

TEST(CliTest, TransformReadsStdinAndPrintsLabels) {
  const Result r = RunCli("transform --op endline --labels < /dev/null");
  EXPECT_EQ(r.exit_code, 2);
  const Result labelled =
      RunCli("transform --op line --labels --graph6 Bg");
  EXPECT_EQ(labelled.exit_code, 0);
  EXPECT_EQ(labelled.out, "A_\n{\"0\":\"e0-1\",\"1\":\"e1-2\"}\n");
}

TEST(CliTest, TransformRejectsBadGraph6) {
  EXPECT_EQ(RunCli("transform --op line --graph6 'B '").exit_code, 2);
}

TEST(CliTest, InvariantJsonLines) {
  const Result r = RunCli("invariant --which D,chiD --graph6 EhEG");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.out,
            "{\"kind\":\"D\",\"value\":2,\"certified\":true}\n"
            "{\"kind\":\"chiD\",\"value\":4,\"certified\":true}\n");
}

TEST(CliTest, InvariantAllKinds) {
  const Result all = RunCli("invariant --which all --graph6 C6");
  EXPECT_EQ(all.exit_code, 0);
  EXPECT_EQ(CountLines(all.out), 6);
  EXPECT_EQ(RunCli("invariant --graph6 C6").out, all.out);
}

TEST(CliTest, InvariantWitness) {
  const Result r = RunCli("invariant --which D --witness --graph6 Bg");
  EXPECT_NE(r.out.find("\"witness\":{\"v0\":1,\"v1\":1,\"v2\":2}"),
            std::string::npos)
      << r.out;
}

TEST(CliTest, InvariantUndefinedOnK2) {
  const Result r = RunCli("invariant --which Dp --graph6 A_");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_NE(r.out.find("\"value\":null"), std::string::npos);
}

TEST(CliTest, AutOrderAndList) {
  EXPECT_EQ(RunCli("aut --graph6 EhEG").out, "12\n");
  const Result r = RunCli("aut --graph6 Bg --list");
  EXPECT_EQ(r.out, "2\n0 1 2\n2 1 0\n");
}

TEST(CliTest, ConstructExceptional) {
  const Result r = RunCli("construct --which exceptional --graph K3,3");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_NE(r.out.find("\"palette\": 5"), std::string::npos);
  EXPECT_NE(r.out.find("\"distinguishing\": true"), std::string::npos);
}

TEST(CliTest, ConstructSubdivisionOfEndline) {
  const Result r = RunCli("construct --which thm47 --graph K5+");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_NE(r.out.find("\"palette\": 3"), std::string::npos);
  EXPECT_NE(r.out.find("\"proper\": true"), std::string::npos);
}

TEST(CliTest, ConstructLift) {
  const Result r = RunCli("construct --which lift --graph C5");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_NE(r.out.find("\"e0-1\""), std::string::npos);
}

TEST(CliTest, ConstructUnknownWhich) {
  EXPECT_EQ(RunCli("construct --which nope --graph C5").exit_code, 2);
}

TEST(CliTest, SafetyCapFromEnvironment) {
  const Result r = RunCli("aut --graph6 IheA@GUAo");
  EXPECT_EQ(r.out, "120\n");
  const std::string capped = "SYMBREAK_MAX_VERTICES=8 ";
  const std::string command = capped + SYMBREAK_CLI_PATH +
                              " aut --graph6 IheA@GUAo >/dev/null 2>&1";
  const int status = std::system(command.c_str());
  EXPECT_EQ(WEXITSTATUS(status), 2);
}

}  // namespace
