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

// Acceptance suite: prints one PASS/FAIL line per criterion and exits
// non-zero when any criterion fails.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "mkvc/analysis.h"
#include "mkvc/generate.h"
#include "mkvc/reduction.h"
#include "mkvc/solvers.h"
#include "mkvc/verify.h"
#include "mkvc_cli/cli.h"
#include "testing/helpers.h"

namespace mkvc {
namespace {

namespace fs = std::filesystem;

constexpr int kExhaustiveMaxN = 8;
constexpr int kRandomCount = 1000;
constexpr int kRandomMaxN = 12;
constexpr int kReductionCount = 200;
constexpr int kReductionMaxN = 10;
constexpr int kSemiRegularCount = 100;
constexpr int kSemiRegularMaxN = 12;
constexpr std::uint64_t kSeed = 20260101;
constexpr double kRuntimeLimitSeconds = 600;

class Reporter {
 public:
  void Line(int criterion, const std::string& title, bool passed, const std::string& detail) {
    std::cout << (passed ? "PASS" : "FAIL") << " criterion " << criterion << " (" << title
              << "): " << detail << std::endl;
    if (!passed) ++failures_;
  }
  int failures() const { return failures_; }

 private:
  int failures_ = 0;
};

const CheckResult& Find(const std::vector<CheckResult>& checks, const std::string& name) {
  for (const CheckResult& c : checks) {
    if (c.name == name) return c;
  }
  static const CheckResult missing{"missing", false, "check not produced"};
  return missing;
}

std::string Join(std::initializer_list<const CheckResult*> parts) {
  std::string out;
  for (const CheckResult* c : parts) {
    if (!out.empty()) out += "; ";
    out += c->name + (c->passed ? " ok" : " FAILED") + " [" + c->detail + "]";
  }
  return out;
}

struct CliRun {
  int code;
  std::string out;
};

CliRun RunCli(const std::vector<std::string>& args) {
  std::vector<const char*> argv = {"mkvc"};
  for (const std::string& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::CliMain(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str()};
}

int Main() {
  Reporter report;
  const auto start = std::chrono::steady_clock::now();

  // Criteria 1-3 and 7 share one corpus: the exhaustive sweep plus seeded
  // random weighted instances.
  CorpusAuditor::Options sweep_options;
  sweep_options.prop1 = true;
  CorpusAuditor sweep(sweep_options);
  CorpusAuditor::Options random_options;
  random_options.prop1 = false;
  CorpusAuditor random(random_options);
  CorpusAuditor adversarial(random_options);
  long oracle_mismatches = 0;
  long instances = 0;
  auto cross_check = [&](const BipartiteInstance& inst) {
    ++instances;
    if (SolveExact(inst).covered_weight != testing::BruteForceOptimum(inst)) ++oracle_mismatches;
  };
  ForEachExhaustiveInstance(kExhaustiveMaxN, [&](const BipartiteInstance& inst) {
    cross_check(inst);
    sweep.Audit(inst);
  });
  for (const BipartiteInstance& inst : RandomWeightedCorpus(kRandomCount, kRandomMaxN, kSeed)) {
    cross_check(inst);
    random.Audit(inst);
  }
  for (int k = 2; k <= 4; ++k) {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
      GenSpec spec;
      spec.kind = GenKind::kGreedyAdversarial;
      spec.k = k;
      spec.seed = seed;
      const BipartiteInstance inst = GenerateInteger(spec);
      cross_check(inst);
      adversarial.Audit(inst);
    }
  }
  const double corpus_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const std::vector<CheckResult> sweep_checks = CorpusChecks(sweep.tally(), true);
  const std::vector<CheckResult> random_checks = CorpusChecks(random.tally(), false);
  const std::vector<CheckResult> adversarial_checks = CorpusChecks(adversarial.tally(), false);

  {
    const CheckResult& a = Find(sweep_checks, "oracle-dominance");
    const CheckResult& b = Find(random_checks, "oracle-dominance");
    const CheckResult& c = Find(adversarial_checks, "oracle-dominance");
    const bool ok = a.passed && b.passed && c.passed && oracle_mismatches == 0 &&
                    corpus_seconds < kRuntimeLimitSeconds;
    std::ostringstream detail;
    detail << "exhaustive n<=" << kExhaustiveMaxN << ": " << a.detail << "; random " << kRandomCount
           << " n<=" << kRandomMaxN << ": " << b.detail << "; greedy-adversarial: " << c.detail
           << "; oracle vs independent brute force: "
           << oracle_mismatches << " mismatches over " << instances << " instances; corpus time "
           << static_cast<int>(corpus_seconds) << "s (limit " << kRuntimeLimitSeconds << "s)";
    report.Line(1, "oracle dominance and feasibility", ok, detail.str());
  }
  {
    const CheckResult& a = Find(sweep_checks, "greedy-guarantees");
    const CheckResult& b = Find(random_checks, "greedy-guarantees");
    const CheckResult& c = Find(adversarial_checks, "greedy-guarantees");
    report.Line(2, "greedy guarantees", a.passed && b.passed && c.passed,
                "exhaustive: " + a.detail + "; random: " + b.detail + "; greedy-adversarial: " +
                    c.detail);
  }
  {
    const CheckResult& a = Find(sweep_checks, "alg2-improvement");
    const CheckResult& b = Find(random_checks, "alg2-improvement");
    const CheckResult& c = Find(adversarial_checks, "alg2-improvement");
    report.Line(3, "alg2 improvement over greedy", a.passed && b.passed && c.passed,
                "exhaustive: " + a.detail + "; random: " + b.detail + "; greedy-adversarial: " +
                    c.detail);
  }
  {
    const std::vector<CheckResult> checks = RatioFormulaChecks();
    const CheckResult& improves = Find(checks, "ratio-improves");
    const CheckResult& gap = Find(checks, "ratio-gap-identity");
    const CheckResult& bounds = Find(checks, "ratio-below-case-bounds");
    report.Line(4, "ratio-formula identities", improves.passed && gap.passed && bounds.passed,
                Join({&improves, &gap, &bounds}));
  }
  {
    const std::vector<CheckResult> checks = PtasScheduleChecks();
    const CheckResult& iterations = Find(checks, "ptas-iterations");
    const CheckResult& single = Find(checks, "ptas-single-level");
    const CheckResult& grid = Find(checks, "ptas-count-within-bound");
    report.Line(5, "ptas schedule", iterations.passed && single.passed && grid.passed,
                Join({&iterations, &single, &grid}));
  }
  {
    const CheckResult c = ReductionCheck(
        RandomRationalCorpus(kReductionCount, kReductionMaxN, kSeed + 1), 3, kDefaultOracleBudget);
    report.Line(6, "weight reduction", c.passed, c.detail);
  }
  {
    const CheckResult& literal = Find(sweep_checks, "prop1-sweep");
    const CheckResult& partition = Find(sweep_checks, "prop1-partition-identity");
    const CheckResult& worst = Find(sweep_checks, "prop1-worst-subset");
    const CheckResult& best = Find(sweep_checks, "prop1-best-subset-form");
    report.Line(7, "optimum-subset coverage sweep", literal.passed,
                Join({&literal, &partition, &worst, &best}));
  }
  {
    const CheckResult c = SemiRegularCheck(
        SemiRegularCorpus(kSemiRegularCount, kSemiRegularMaxN, kSeed + 2), kDefaultOracleBudget);
    report.Line(8, "semi-regular exactness", c.passed, c.detail);
  }
  {
    const fs::path dir = fs::temp_directory_path() / "mkvc_acceptance_bench";
    fs::remove_all(dir);
    fs::create_directories(dir);
    for (int i = 1; i <= 6; ++i) {
      RunCli({"gen", "--n-left", "5", "--n-right", "6", "--seed", std::to_string(i), "-o",
              (dir / ("inst" + std::to_string(i) + ".mkvc")).string()});
    }
    const std::vector<std::string> bench = {"bench", dir.string(), "--oracle", "--no-timing",
                                            "--solvers", "greedy,topside,alg1,alg2,ptas,exact"};
    const std::vector<std::string> verify = {"verify", "--small-n", "5", "--random-count", "40"};
    const CliRun bench1 = RunCli(bench);
    const CliRun bench2 = RunCli(bench);
    const CliRun verify1 = RunCli(verify);
    const CliRun verify2 = RunCli(verify);
    fs::remove_all(dir);
    const bool bench_stable = bench1.code == 0 && bench1.code == bench2.code && bench1.out == bench2.out;
    const bool verify_stable = verify1.code == verify2.code && verify1.out == verify2.out;
    std::ostringstream detail;
    detail << "bench " << (bench_stable ? "byte-identical" : "DIFFERS") << " (" << bench1.out.size()
           << " bytes, exit " << bench1.code << "); verify "
           << (verify_stable ? "byte-identical" : "DIFFERS") << " (" << verify1.out.size()
           << " bytes, exit " << verify1.code << ")";
    report.Line(9, "determinism", bench_stable && verify_stable, detail.str());
  }

  const double total =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::cout << (report.failures() == 0 ? "all criteria passed"
                                       : std::to_string(report.failures()) + " of 9 criteria failed")
            << " in " << static_cast<int>(total) << "s" << std::endl;
  return report.failures() == 0 ? 0 : 1;
}

}  // namespace
}  // namespace mkvc

int main() { return mkvc::Main(); }
