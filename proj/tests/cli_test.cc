// Copyright 2026 The Authors.
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

#include <filesystem>
#include <fstream>
#include <initializer_list>
#include <sstream>
#include <string>
#include <vector>

#include "gtest/gtest.h"
#include "mkvc_cli/cli.h"

namespace mkvc::cli {
namespace {

namespace fs = std::filesystem;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result Cli(std::initializer_list<std::string> args) {
  std::vector<std::string> storage = {"mkvc"};
  storage.insert(storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const std::string& a : storage) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int code = CliMain(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("mkvc_cli_test_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string Write(const std::string& name, const std::string& text) {
    const fs::path path = dir_ / name;
    std::ofstream(path) << text;
    return path.string();
  }

  fs::path dir_;
};

constexpr char kK22[] = "p mkvc 2 2 4 1\ne 0 0 1\ne 0 1 1\ne 1 0 1\ne 1 1 1\n";

TEST_F(CliTest, SolveExactOnK22) {
  const Result r = Cli({"solve", Write("k22.mkvc", kK22), "--algorithm", "exact"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("value 2\n"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("vertices L0\n"), std::string::npos) << r.out;
}

TEST_F(CliTest, SolveEveryAlgorithm) {
  const std::string path = Write("k22.mkvc", kK22);
  for (const char* algorithm :
       {"greedy", "topside", "alg1", "alg2", "ptas", "exact", "semiregular"}) {
    const Result r = Cli({"solve", path, "--algorithm", algorithm});
    EXPECT_EQ(r.code, kExitOk) << algorithm << ": " << r.err;
    EXPECT_NE(r.out.find("value 2\n"), std::string::npos) << algorithm;
  }
}

TEST_F(CliTest, PtasWarnsWhenDepthFallsShort) {
  const std::string path = Write("k22.mkvc", kK22);
  const Result shallow = Cli({"solve", path, "--algorithm", "ptas", "--epsilon", "0.1"});
  EXPECT_EQ(shallow.code, kExitOk);
  EXPECT_NE(shallow.out.find("ptas_iterations 263"), std::string::npos);
  EXPECT_NE(shallow.err.find("warning"), std::string::npos);
  const Result deep = Cli({"solve", path, "--algorithm", "ptas", "--epsilon", "1/3",
                           "--max-depth", "8"});
  EXPECT_EQ(deep.code, kExitOk);
  EXPECT_EQ(deep.err, "");
}

TEST_F(CliTest, UsageErrorsExit64) {
  EXPECT_EQ(Cli({}).code, kExitUsage);
  EXPECT_EQ(Cli({"frobnicate"}).code, kExitUsage);
  const Result unknown = Cli({"solve", Write("k22.mkvc", kK22), "--bogus"});
  EXPECT_EQ(unknown.code, kExitUsage);
  EXPECT_NE(unknown.err.find("Usage"), std::string::npos);
  EXPECT_EQ(Cli({"solve", Write("a.mkvc", kK22), "--algorithm", "magic"}).code, kExitUsage);
  EXPECT_EQ(Cli({"verify", "--small-n", "40"}).code, kExitUsage);
  EXPECT_EQ(Cli({"--help"}).code, kExitOk);
}

TEST_F(CliTest, SolverErrorsExit1) {
  const std::string path = Write("k22.mkvc", kK22);
  EXPECT_EQ(Cli({"solve", (dir_ / "missing.mkvc").string()}).code, kExitSolverError);
  EXPECT_EQ(Cli({"solve", path, "--algorithm", "alg2", "--c", "2"}).code, kExitSolverError);
  EXPECT_EQ(Cli({"solve", path, "--algorithm", "ptas", "--epsilon", "0.6"}).code,
            kExitSolverError);
  EXPECT_EQ(Cli({"solve", path, "--algorithm", "exact", "--oracle-budget", "1"}).code,
            kExitSolverError);
  const std::string broken = Write("dup.mkvc", "p mkvc 1 1 2 1\ne 0 0 1\ne 0 0 1\n");
  const Result r = Cli({"solve", broken});
  EXPECT_EQ(r.code, kExitSolverError);
  EXPECT_NE(r.err.find("line 3"), std::string::npos) << r.err;
}

TEST_F(CliTest, RationalInstancesNeedScaling) {
  const std::string path = Write("q.mkvc", "p mkvc 2 1 2 1\ne 0 0 7/2\ne 1 0 1/3\n");
  EXPECT_EQ(Cli({"solve", path, "--algorithm", "exact"}).code, kExitSolverError);
  const Result r = Cli({"solve", path, "--algorithm", "exact", "--scale-ell", "3"});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NE(r.out.find("value 23/6\n"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("scaled_value 30\n"), std::string::npos) << r.out;
}

TEST_F(CliTest, GenIsDeterministic) {
  const Result a = Cli({"gen", "--n-left", "5", "--n-right", "6", "--seed", "42"});
  const Result b = Cli({"gen", "--n-left", "5", "--n-right", "6", "--seed", "42"});
  EXPECT_EQ(a.code, kExitOk);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.out.rfind("p mkvc 5 6 ", 0), 0u);
  const std::string file = (dir_ / "g.mkvc").string();
  EXPECT_EQ(Cli({"gen", "--kind", "semiregular", "--n-left", "4", "--n-right", "6", "--d-left",
                 "3", "-o", file})
                .code,
            kExitOk);
  EXPECT_TRUE(fs::exists(file));
  EXPECT_EQ(Cli({"gen", "--kind", "semiregular", "--n-left", "3", "--n-right", "4", "--d-left",
                 "3"})
                .code,
            kExitSolverError);
}

TEST_F(CliTest, BenchIsByteStableWithoutTiming) {
  const fs::path corpus = dir_ / "corpus";
  fs::create_directories(corpus);
  for (int seed = 1; seed <= 4; ++seed) {
    const std::string file = (corpus / ("r" + std::to_string(seed) + ".mkvc")).string();
    ASSERT_EQ(Cli({"gen", "--n-left", "4", "--n-right", "5", "--seed", std::to_string(seed), "-o",
                   file})
                  .code,
              kExitOk);
  }
  const Result a = Cli({"bench", corpus.string(), "--oracle", "--no-timing", "--solvers",
                        "greedy,alg2,exact"});
  const Result b = Cli({"bench", corpus.string(), "--oracle", "--no-timing", "--solvers",
                        "greedy,alg2,exact"});
  EXPECT_EQ(a.code, kExitOk) << a.err;
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.out.rfind("instance_id,solver,value,opt,ratio,time_ms,error\n", 0), 0u);
  EXPECT_NE(a.out.find("r1,alg2(c=3;greedy),"), std::string::npos);
  EXPECT_NE(a.out.find("summary:min,greedy,"), std::string::npos);
}

TEST_F(CliTest, BenchOracleInfeasibleExits1) {
  std::string big = "p mkvc 12 12 144 12\n";
  for (int i = 0; i < 12; ++i) {
    for (int j = 0; j < 12; ++j) big += "e " + std::to_string(i) + ' ' + std::to_string(j) + " 1\n";
  }
  const std::string path = Write("big.mkvc", big);
  const Result r = Cli({"bench", path, "--oracle", "--oracle-budget", "1000"});
  EXPECT_EQ(r.code, kExitSolverError);
  EXPECT_NE(r.err.find("instance too large for oracle"), std::string::npos) << r.err;
  EXPECT_NE(r.out.find("instance_id"), std::string::npos);
}

// The suite includes two claims that are false as stated; every other check
// must pass and the exit code must report the failure.
TEST_F(CliTest, VerifyReportsKnownFailures) {
  const Result r = Cli({"verify", "--small-n", "4", "--random-count", "10", "--reduction-count",
                        "5", "--semiregular-count", "5"});
  EXPECT_EQ(r.code, kExitVerifyFailed);
  std::istringstream lines(r.out);
  std::vector<std::string> failed;
  int passed = 0;
  for (std::string line; std::getline(lines, line);) {
    if (line.rfind("FAIL ", 0) == 0) failed.push_back(line.substr(5, line.find(':') - 5));
    if (line.rfind("PASS ", 0) == 0) ++passed;
  }
  EXPECT_EQ(failed, (std::vector<std::string>{"prop1-sweep", "ratio-below-case-bounds"}));
  EXPECT_GE(passed, 15);
}

}  // namespace
}  // namespace mkvc::cli
