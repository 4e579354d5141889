// Copyright 2026 The pcst Authors
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

#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>
#include <string>

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

struct RunResult {
  int status = -1;
  std::string out;
};

RunResult Cli(const std::string& args) {
  const std::string command = std::string(PCST_CLI_PATH) + " " + args + " 2>/dev/null";
  RunResult result;
  FILE* pipe = ::popen(command.c_str(), "r");
  if (pipe == nullptr) return result;
  char buffer[4096];
  std::size_t read = 0;
  while ((read = std::fread(buffer, 1, sizeof(buffer), pipe)) > 0) result.out.append(buffer, read);
  const int raw = ::pclose(pipe);
  result.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return result;
}

std::string Slurp(const fs::path& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("pcst_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string Path(const std::string& name) const { return (dir_ / name).string(); }
  void WriteFile(const std::string& name, const std::string& text) const { std::ofstream(dir_ / name) << text; }

  fs::path dir_;
};

TEST_F(CliTest, SolveStar) {
  ASSERT_EQ(Cli("gen fig1-star --rho 1 -o " + Path("star.json")).status, 0);
  const RunResult run = Cli("solve " + Path("star.json") + " --json");
  ASSERT_EQ(run.status, 0);
  const json report = json::parse(run.out);
  EXPECT_EQ(report["solution"]["objective"], "4/1");
  EXPECT_EQ(report["solution"]["lower_bound"], "2/1");
}

TEST_F(CliTest, SolveSingleVertex) {
  WriteFile("one.json", R"({"n": 1, "prizes": [3], "edges": []})");
  const RunResult run = Cli("solve " + Path("one.json") + " --json");
  ASSERT_EQ(run.status, 0);
  EXPECT_EQ(json::parse(run.out)["solution"]["objective"], "0/1");
}

TEST_F(CliTest, ExactCompare) {
  ASSERT_EQ(Cli("gen fig1-star --rho 1 -o " + Path("star.json")).status, 0);
  const RunResult run = Cli("exact " + Path("star.json") + " --compare --json");
  ASSERT_EQ(run.status, 0);
  const json report = json::parse(run.out);
  EXPECT_EQ(report["exact"]["optimum"], "3/1");
  EXPECT_EQ(report["ratio"], "4/3");
}

TEST_F(CliTest, GenFigure1SmallRho) {
  ASSERT_EQ(Cli("gen fig1-star --rho 1/100 -o " + Path("star.json")).status, 0);
  const RunResult run = Cli("exact " + Path("star.json") + " --json");
  ASSERT_EQ(run.status, 0);
  EXPECT_EQ(json::parse(run.out)["exact"]["optimum"], "201/100");
}

TEST_F(CliTest, GenRandomSingleVertex) {
  const RunResult run = Cli("gen random --n 1 --seed 3");
  ASSERT_EQ(run.status, 0);
  EXPECT_EQ(json::parse(run.out)["n"], 1);
}

TEST_F(CliTest, FormatsAgree) {
  ASSERT_EQ(Cli("gen fig1-path --k 4 --rho 1/3 -o " + Path("path.json")).status, 0);
  ASSERT_EQ(Cli("gen fig1-path --k 4 --rho 1/3 --format stp -o " + Path("path.stp")).status, 0);
  const RunResult a = Cli("solve " + Path("path.json") + " --json");
  const RunResult b = Cli("solve " + Path("path.stp") + " --json");
  ASSERT_EQ(a.status, 0);
  ASSERT_EQ(b.status, 0);
  EXPECT_EQ(a.out, b.out);
}

TEST_F(CliTest, TraceIsDeterministic) {
  ASSERT_EQ(Cli("gen random --n 30 --p 1/5 --seed 11 -o " + Path("r.json")).status, 0);
  ASSERT_EQ(Cli("solve " + Path("r.json") + " --trace " + Path("t1.jsonl")).status, 0);
  ASSERT_EQ(Cli("solve " + Path("r.json") + " --trace " + Path("t2.jsonl")).status, 0);
  const std::string trace = Slurp(Path("t1.jsonl"));
  EXPECT_FALSE(trace.empty());
  EXPECT_EQ(trace, Slurp(Path("t2.jsonl")));
  std::istringstream lines(trace);
  std::string line;
  while (std::getline(lines, line)) EXPECT_NO_THROW(json::parse(line)) << line;
}

TEST_F(CliTest, VerifyAcceptsAndRejects) {
  ASSERT_EQ(Cli("gen random --n 12 --p 1/3 --seed 5 -o " + Path("r.json")).status, 0);
  const RunResult solved = Cli("solve " + Path("r.json") + " --json");
  ASSERT_EQ(solved.status, 0);
  WriteFile("sol.json", solved.out);
  EXPECT_EQ(Cli("verify " + Path("sol.json") + " " + Path("r.json")).status, 0);

  json inflated = json::parse(solved.out);
  inflated["solution"]["duals"][0]["y"] = "1000/1";
  WriteFile("inflated.json", inflated.dump());
  EXPECT_EQ(Cli("verify " + Path("inflated.json") + " " + Path("r.json")).status, 3);

  json lying = json::parse(solved.out);
  lying["solution"]["objective"] = "0/1";
  WriteFile("lying.json", lying.dump());
  EXPECT_EQ(Cli("verify " + Path("lying.json") + " " + Path("r.json")).status, 3);
}

TEST_F(CliTest, VerifyRejectsBrokenTree) {
  ASSERT_EQ(Cli("gen fig1-star --rho 1 -o " + Path("star.json")).status, 0);
  const RunResult solved = Cli("solve " + Path("star.json") + " --json");
  json broken = json::parse(solved.out);
  broken["solution"]["tree"]["edges"].erase(0);
  broken["solution"]["tree"]["edge_endpoints"].erase(0);
  WriteFile("broken.json", broken.dump());
  EXPECT_EQ(Cli("verify " + Path("broken.json") + " " + Path("star.json")).status, 3);
}

TEST_F(CliTest, ExitCodes) {
  WriteFile("bad.json", "{\"n\": 2, \"prizes\": [1, 1], \"edges\": [[0, 1, ]]}");
  EXPECT_EQ(Cli("solve " + Path("bad.json")).status, 2);
  EXPECT_EQ(Cli("solve " + Path("missing.json")).status, 2);
  EXPECT_EQ(Cli("").status, 1);
  EXPECT_EQ(Cli("frobnicate").status, 1);
  EXPECT_EQ(Cli("gen fig1-star --rho -1").status, 1);
  EXPECT_EQ(Cli("--help").status, 0);
}

}  // namespace
