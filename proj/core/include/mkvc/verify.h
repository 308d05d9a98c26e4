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

// Executable property suite: oracle sweeps over exhaustive and seeded
// corpora plus exact checks of the ratio formulas.

#ifndef MKVC_VERIFY_H_
#define MKVC_VERIFY_H_

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "mkvc/instance.h"
#include "mkvc/ratio.h"
#include "mkvc/reduction.h"
#include "mkvc/solvers.h"

namespace mkvc {

// Calls `visit` on every bipartite graph with unit weights, both sides
// non-empty and n_left + n_right in [2, max_n], once per budget k in
// [1, n - 1]. Orders up to `labeled_max_n` are enumerated as labeled graphs;
// larger orders visit one representative per class of graphs equal up to
// relabeling vertices within each side (the smallest adjacency mask).
void ForEachExhaustiveInstance(int max_n, const std::function<void(const BipartiteInstance&)>& visit,
                               int labeled_max_n = 7);

// True when `mask` (bit i * n_right + j for edge (i, j)) is the smallest
// mask among all graphs obtained by permuting each side.
bool IsCanonicalBipartiteMask(std::uint64_t mask, int n_left, int n_right);

// Seeded random instances with weights in [1, 100] and 2 <= n <= max_n.
std::vector<BipartiteInstance> RandomWeightedCorpus(int count, int max_n, std::uint64_t seed);
std::vector<RationalInstance> RandomRationalCorpus(int count, int max_n, std::uint64_t seed);
// Unit-weight side-regular instances with 2 <= n <= max_n.
std::vector<BipartiteInstance> SemiRegularCorpus(int count, int max_n, std::uint64_t seed);

// Runs the solver line-up against the oracle on each audited instance and
// tallies every invariant.
class CorpusAuditor {
 public:
  struct Options {
    Ratio ptas_epsilon = Ratio(1, 10);
    int ptas_depth = 2;
    int c = 3;
    bool prop1 = true;       // every X subset of O
    bool prefix_checks = false;  // worst-subset lower bound and prefix decomposition
    std::uint64_t oracle_budget = kDefaultOracleBudget;
  };

  struct Tally {
    long instances = 0;
    long solver_runs = 0;
    long size_violations = 0;
    long consistency_violations = 0;  // covered_weight != recomputed weight
    long dominance_violations = 0;    // value > opt
    long greedy_e_violations = 0;     // 100 * greedy < 63 * opt
    long greedy_kn_violations = 0;    // n * greedy < k * opt
    long alg2_below_greedy = 0;
    Weight alg2_worst_value = 1;      // worst alg2 value / opt, as a fraction
    Weight alg2_worst_opt = 1;
    long prop1_checks = 0;
    long prop1_failures = 0;              // stated per-X inequality
    long prop1_partition_failures = 0;
    long prop1_worst_subset_failures = 0;
    long prop1_worst_x_failures = 0;      // inequality restricted to worst X
    long prop1_best_form_failures = 0;    // best-subset share instead of worst
    long cw_bound_checks = 0;
    long cw_bound_failures = 0;
    long prefix_decomposition_checks = 0;
    long prefix_decomposition_failures = 0;
    std::vector<std::string> examples;    // first few counterexamples
  };

  CorpusAuditor() : CorpusAuditor(Options{}) {}
  explicit CorpusAuditor(Options options);

  void Audit(const BipartiteInstance& inst);
  const Tally& tally() const { return tally_; }
  // Solvers checked for dominance; the bool marks those that must return
  // exactly k vertices.
  const std::vector<std::pair<SolverSpec, bool>>& lineup() const { return lineup_; }

 private:
  void Note(const std::string& what, const BipartiteInstance& inst);

  Options options_;
  std::vector<std::pair<SolverSpec, bool>> lineup_;
  Tally tally_;
};

// Text form "p mkvc ..." with edges joined by ';', for counterexample reports.
std::string Describe(const BipartiteInstance& inst);

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct VerifyOptions {
  int small_n = 6;
  int labeled_max_n = 7;
  int random_count = 200;
  int random_max_n = 10;
  int reduction_count = 50;
  int reduction_max_n = 10;
  int reduction_ell = 3;
  int semiregular_count = 50;
  int semiregular_max_n = 12;
  int ptas_depth = 2;
  std::uint64_t seed = 2026;
  std::uint64_t oracle_budget = kDefaultOracleBudget;
};

struct VerifyReport {
  std::vector<CheckResult> checks;
  bool all_passed() const;
};

// Individual check families, shared with the acceptance suite.
std::vector<CheckResult> CorpusChecks(const CorpusAuditor::Tally& tally, bool include_prop1);
std::vector<CheckResult> RatioFormulaChecks();
std::vector<CheckResult> PtasScheduleChecks();
CheckResult ReductionCheck(const std::vector<RationalInstance>& corpus, int ell,
                           std::uint64_t oracle_budget);
CheckResult SemiRegularCheck(const std::vector<BipartiteInstance>& corpus,
                             std::uint64_t oracle_budget);
CheckResult RoundTripCheck(const std::vector<RationalInstance>& corpus);

VerifyReport RunVerification(const VerifyOptions& options);

// "PASS name: detail" / "FAIL name: detail", one line per check, then a
// summary line.
void PrintReport(const VerifyReport& report, std::ostream& out);

}  // namespace mkvc

#endif  // MKVC_VERIFY_H_
