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

#include "mkvc/verify.h"

#include <algorithm>
#include <map>
#include <mutex>
#include <ostream>
#include <sstream>

#include "mkvc/analysis.h"
#include "mkvc/generate.h"
#include "mkvc/instance_io.h"

namespace mkvc {
namespace {

constexpr std::size_t kMaxExamples = 3;

std::string Count(long failures, long total) {
  return std::to_string(failures) + " violations in " + std::to_string(total) + " checks";
}

}  // namespace

namespace {

std::vector<std::vector<int>> Permutations(int n) {
  std::vector<int> p(n);
  for (int i = 0; i < n; ++i) p[i] = i;
  std::vector<std::vector<int>> all;
  do {
    all.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return all;
}

// Bit position tables, one per (left, right) permutation pair.
const std::vector<std::vector<int>>& RelabelTables(int n_left, int n_right) {
  static std::map<std::pair<int, int>, std::vector<std::vector<int>>> cache;
  static std::mutex mutex;
  const std::lock_guard<std::mutex> lock(mutex);
  auto [it, inserted] = cache.try_emplace({n_left, n_right});
  if (inserted) {
    for (const std::vector<int>& pl : Permutations(n_left)) {
      for (const std::vector<int>& pr : Permutations(n_right)) {
        std::vector<int> table(n_left * n_right);
        for (int i = 0; i < n_left; ++i) {
          for (int j = 0; j < n_right; ++j) table[i * n_right + j] = pl[i] * n_right + pr[j];
        }
        it->second.push_back(std::move(table));
      }
    }
  }
  return it->second;
}

}  // namespace

bool IsCanonicalBipartiteMask(std::uint64_t mask, int n_left, int n_right) {
  const int bits = n_left * n_right;
  for (const std::vector<int>& table : RelabelTables(n_left, n_right)) {
    std::uint64_t image = 0;
    for (int bit = 0; bit < bits; ++bit) {
      if (mask >> bit & 1U) image |= std::uint64_t{1} << table[bit];
    }
    if (image < mask) return false;
  }
  return true;
}

void ForEachExhaustiveInstance(int max_n, const std::function<void(const BipartiteInstance&)>& visit,
                               int labeled_max_n) {
  for (int n = 2; n <= max_n; ++n) {
    for (int n_left = 1; n_left < n; ++n_left) {
      const int n_right = n - n_left;
      const int pairs = n_left * n_right;
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
        if (n > labeled_max_n && !IsCanonicalBipartiteMask(mask, n_left, n_right)) continue;
        std::vector<Edge> edges;
        for (int bit = 0; bit < pairs; ++bit) {
          if (mask >> bit & 1U) edges.push_back(Edge{bit / n_right, bit % n_right, 1});
        }
        const BipartiteInstance base(n_left, n_right, std::move(edges), 1);
        for (int k = 1; k < n; ++k) visit(k == 1 ? base : base.WithBudget(k));
      }
    }
  }
}

std::vector<BipartiteInstance> RandomWeightedCorpus(int count, int max_n, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<BipartiteInstance> corpus;
  corpus.reserve(count);
  for (int i = 0; i < count; ++i) {
    GenSpec spec;
    const int n = static_cast<int>(rng.UniformInt(2, max_n));
    spec.n_left = static_cast<int>(rng.UniformInt(1, n - 1));
    spec.n_right = n - spec.n_left;
    spec.edge_prob = 0.2 + 0.7 * static_cast<double>(rng.UniformInt(0, 100)) / 100.0;
    spec.k = static_cast<int>(rng.UniformInt(1, n - 1));
    spec.seed = rng.Next();
    corpus.push_back(GenerateInteger(spec));
  }
  return corpus;
}

std::vector<RationalInstance> RandomRationalCorpus(int count, int max_n, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<RationalInstance> corpus;
  corpus.reserve(count);
  while (static_cast<int>(corpus.size()) < count) {
    GenSpec spec;
    const int n = static_cast<int>(rng.UniformInt(2, max_n));
    spec.n_left = static_cast<int>(rng.UniformInt(1, n - 1));
    spec.n_right = n - spec.n_left;
    spec.edge_prob = 0.3 + 0.6 * static_cast<double>(rng.UniformInt(0, 100)) / 100.0;
    spec.k = static_cast<int>(rng.UniformInt(1, n - 1));
    spec.rational = true;
    spec.seed = rng.Next();
    RationalInstance inst = Generate(spec);
    if (!inst.edges.empty()) corpus.push_back(std::move(inst));
  }
  return corpus;
}

std::vector<BipartiteInstance> SemiRegularCorpus(int count, int max_n, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<BipartiteInstance> corpus;
  corpus.reserve(count);
  while (static_cast<int>(corpus.size()) < count) {
    GenSpec spec;
    spec.kind = GenKind::kSemiRegular;
    const int n = static_cast<int>(rng.UniformInt(2, max_n));
    spec.n_left = static_cast<int>(rng.UniformInt(1, n - 1));
    spec.n_right = n - spec.n_left;
    spec.degree_left = static_cast<int>(rng.UniformInt(0, spec.n_right));
    if ((spec.n_left * spec.degree_left) % spec.n_right != 0) continue;
    spec.k = static_cast<int>(rng.UniformInt(1, n - 1));
    spec.seed = rng.Next();
    corpus.push_back(GenerateInteger(spec));
  }
  return corpus;
}

std::string Describe(const BipartiteInstance& inst) {
  std::ostringstream out;
  out << "p mkvc " << inst.n_left() << ' ' << inst.n_right() << ' ' << inst.num_edges() << ' '
      << inst.k();
  for (const Edge& e : inst.edges()) out << "; e " << e.left << ' ' << e.right << ' ' << e.weight;
  return out.str();
}

CorpusAuditor::CorpusAuditor(Options options) : options_(std::move(options)) {
  const SolverSpec greedy = SolverSpec::Greedy();
  lineup_ = {
      {greedy, true},
      {SolverSpec::TopSide(Side::kLeft), false},
      {SolverSpec::TopSide(Side::kRight), false},
      {SolverSpec::TopSideSplit(), true},
      {SolverSpec::Alg1Split(greedy), true},
      {SolverSpec::Alg2(options_.c, greedy), true},
      {SolverSpec::Ptas(options_.ptas_epsilon, greedy, options_.ptas_depth, options_.c), true},
  };
}

void CorpusAuditor::Note(const std::string& what, const BipartiteInstance& inst) {
  if (tally_.examples.size() < kMaxExamples) {
    tally_.examples.push_back(what + " on [" + Describe(inst) + "]");
  }
}

void CorpusAuditor::Audit(const BipartiteInstance& inst) {
  ++tally_.instances;
  const CoverSolution exact = SolveExact(inst, options_.oracle_budget);
  const Weight opt = exact.covered_weight;
  const int k = inst.k();
  const int n = inst.order();

  auto check_solution = [&](const SolverSpec& spec, const CoverSolution& sol, bool exact_k) {
    ++tally_.solver_runs;
    const std::size_t expected =
        exact_k ? static_cast<std::size_t>(k)
                : static_cast<std::size_t>(std::min(k, inst.side_size(spec.side)));
    if (sol.vertices.size() != expected) {
      ++tally_.size_violations;
      Note(spec.Label() + " returned " + std::to_string(sol.vertices.size()) + " vertices", inst);
    }
    if (CoveredWeight(inst, sol.vertices) != sol.covered_weight) {
      ++tally_.consistency_violations;
      Note(spec.Label() + " inconsistent weight", inst);
    }
    if (sol.covered_weight > opt) {
      ++tally_.dominance_violations;
      Note(spec.Label() + " beats the oracle", inst);
    }
  };

  check_solution(SolverSpec::Exact(options_.oracle_budget), exact, true);
  Weight greedy_value = 0;
  for (const auto& [spec, exact_k] : lineup_) {
    const CoverSolution sol = Solve(spec, inst);
    check_solution(spec, sol, exact_k);
    if (spec.kind == SolverKind::kGreedy) {
      greedy_value = sol.covered_weight;
      if (100 * sol.covered_weight < 63 * opt) {
        ++tally_.greedy_e_violations;
        Note("greedy below (1-1/e) opt", inst);
      }
      if (static_cast<std::uint64_t>(n) * sol.covered_weight <
          static_cast<std::uint64_t>(k) * opt) {
        ++tally_.greedy_kn_violations;
        Note("greedy below (k/n) opt", inst);
      }
    }
    if (spec.kind == SolverKind::kAlg2) {
      if (sol.covered_weight < greedy_value) {
        ++tally_.alg2_below_greedy;
        Note("alg2 below greedy", inst);
      }
      // Keep the smallest value/opt by cross-multiplication.
      if (opt > 0 && static_cast<unsigned __int128>(sol.covered_weight) * tally_.alg2_worst_opt <
                         static_cast<unsigned __int128>(tally_.alg2_worst_value) * opt) {
        tally_.alg2_worst_value = sol.covered_weight;
        tally_.alg2_worst_opt = opt;
      }
    }
  }
  if (IsSemiRegularUnweighted(inst)) {
    check_solution(SolverSpec::SemiRegular(), SolveSemiRegularExact(inst), true);
  }

  if (options_.prop1 && k <= OptimumProfile::kMaxOptimumSize) {
    const OptimumProfile profile = OptimumProfile::Trusted(inst, exact.vertices, opt);
    const std::uint32_t full = (std::uint32_t{1} << profile.size()) - 1;
    for (std::uint32_t mask = 0; mask <= full; ++mask) {
      const Prop1Report report = profile.Prop1(mask);
      ++tally_.prop1_checks;
      if (!report.holds) {
        ++tally_.prop1_failures;
        if (tally_.prop1_failures == 1) {
          Note("coverage(O\\X)=" + std::to_string(report.coverage_rest) +
                   " < (1-C_w)opt=" + std::to_string(report.threshold) + " for X=mask " +
                   std::to_string(mask),
               inst);
        }
      }
      if (!report.partition_identity) ++tally_.prop1_partition_failures;
      if (!report.worst_subset_bound) ++tally_.prop1_worst_subset_failures;
      if (report.x_is_worst && !report.holds) ++tally_.prop1_worst_x_failures;
      if (!report.best_subset_form) ++tally_.prop1_best_form_failures;
    }
  }

  if (options_.prefix_checks && opt > 0 && k <= OptimumProfile::kMaxOptimumSize) {
    const OptimumProfile profile = OptimumProfile::Trusted(inst, exact.vertices, opt);
    const SolverSpec greedy = SolverSpec::Greedy();
    const SolverSpec oracle = SolverSpec::Exact(options_.oracle_budget);
    for (int x = 0; x <= std::min(k, inst.n_left()); ++x) {
      const std::vector<VertexRef> prefix = TopLOneSide(inst, Side::kLeft, x);
      const Weight prefix_weight = CoveredWeight(inst, prefix);
      const Ratio c_x{BigInt(prefix_weight), BigInt(opt)};
      const Ratio c_worst{BigInt(profile.Coverage(profile.WorstOfSize(x))), BigInt(opt)};
      for (const SolverSpec& base : {greedy, oracle}) {
        const CoverSolution sol = Solve(SolverSpec::Alg1(x, base), inst);
        const Ratio r{BigInt(sol.covered_weight), BigInt(opt)};
        ++tally_.cw_bound_checks;
        if (c_worst < CwLowerBound(*Guarantee(base), r, c_x)) {
          ++tally_.cw_bound_failures;
          Note("worst-subset share below its lower bound at x=" + std::to_string(x), inst);
        }
        if (base.kind == SolverKind::kExact) {
          const Residual residual = MakeResidual(inst, prefix, k - x);
          const Weight rest = SolveExact(residual.instance, options_.oracle_budget).covered_weight;
          ++tally_.prefix_decomposition_checks;
          if (sol.covered_weight != prefix_weight + rest) {
            ++tally_.prefix_decomposition_failures;
            Note("prefix decomposition mismatch at x=" + std::to_string(x), inst);
          }
        }
      }
    }
  }
}

bool VerifyReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

std::vector<CheckResult> CorpusChecks(const CorpusAuditor::Tally& t, bool include_prop1) {
  std::vector<CheckResult> out;
  std::string examples;
  for (const std::string& e : t.examples) examples += " | " + e;
  {
    const long bad = t.size_violations + t.consistency_violations + t.dominance_violations;
    out.push_back({"oracle-dominance", bad == 0,
                   std::to_string(t.instances) + " instances, " + std::to_string(t.solver_runs) +
                       " solver runs; " + std::to_string(t.size_violations) + " size, " +
                       std::to_string(t.consistency_violations) + " weight, " +
                       std::to_string(t.dominance_violations) + " dominance violations" +
                       (bad ? examples : "")});
  }
  {
    const long bad = t.greedy_e_violations + t.greedy_kn_violations;
    out.push_back({"greedy-guarantees", bad == 0,
                   std::to_string(t.greedy_e_violations) + " below 63/100 opt, " +
                       std::to_string(t.greedy_kn_violations) + " below k/n opt over " +
                       std::to_string(t.instances) + " instances"});
  }
  {
    const Ratio worst{BigInt(t.alg2_worst_value), BigInt(t.alg2_worst_opt)};
    const Ratio threshold(67597, 100000);
    out.push_back({"alg2-improvement", worst >= threshold && t.alg2_below_greedy == 0,
                   "min ratio " + ToDecimal(worst) + " (threshold 0.67597), " +
                       std::to_string(t.alg2_below_greedy) + " instances below greedy"});
  }
  if (include_prop1) {
    out.push_back({"prop1-sweep", t.prop1_failures == 0,
                   "coverage(O\\X) >= (1 - C_w(|X|)) opt: " +
                       Count(t.prop1_failures, t.prop1_checks) +
                       (t.prop1_failures ? examples : "")});
    out.push_back({"prop1-partition-identity", t.prop1_partition_failures == 0,
                   Count(t.prop1_partition_failures, t.prop1_checks)});
    out.push_back({"prop1-worst-subset", t.prop1_worst_subset_failures + t.prop1_worst_x_failures == 0,
                   Count(t.prop1_worst_subset_failures + t.prop1_worst_x_failures,
                         2 * t.prop1_checks)});
    out.push_back({"prop1-best-subset-form", t.prop1_best_form_failures == 0,
                   "coverage(O\\X) >= (1 - C(|X|)) opt: " +
                       Count(t.prop1_best_form_failures, t.prop1_checks)});
  }
  if (t.cw_bound_checks > 0) {
    out.push_back({"cw-lower-bound", t.cw_bound_failures == 0,
                   Count(t.cw_bound_failures, t.cw_bound_checks)});
    out.push_back({"prefix-decomposition", t.prefix_decomposition_failures == 0,
                   Count(t.prefix_decomposition_failures, t.prefix_decomposition_checks)});
  }
  return out;
}

std::vector<CheckResult> RatioFormulaChecks() {
  std::vector<CheckResult> out;
  long not_improving = 0;
  long gap_mismatch = 0;
  long gap_not_decreasing = 0;
  long above_case_bounds = 0;
  int first_within = 0;
  Ratio previous_gap;
  for (int i = 1; i <= 99; ++i) {
    const Ratio rho(i, 100);
    const Ratio improved = ImproveRatio(rho);
    if (!(improved > rho)) ++not_improving;
    const Ratio gap = ImproveRatioGap(rho);
    if (improved - rho != gap) ++gap_mismatch;
    if (i > 1 && !(gap < previous_gap)) ++gap_not_decreasing;
    previous_gap = gap;
    const auto [b11, b12] = SecondaryBounds(rho);
    if (improved > std::min(b11, b12)) {
      ++above_case_bounds;
      first_within = 0;
    } else if (first_within == 0) {
      first_within = i;
    }
  }
  if (ImproveRatio(Ratio(1)) != 1) ++not_improving;
  out.push_back({"ratio-improves", not_improving == 0, Count(not_improving, 100)});
  out.push_back({"ratio-gap-identity", gap_mismatch + gap_not_decreasing == 0,
                 std::to_string(gap_mismatch) + " identity mismatches, " +
                     std::to_string(gap_not_decreasing) + " non-decreasing steps over 99 points"});
  out.push_back({"ratio-below-case-bounds", above_case_bounds == 0,
                 "improved ratio exceeds min((1+rho)/(3-rho), (1+3rho)/(5-rho)) at " +
                     std::to_string(above_case_bounds) + " of 99 grid points" +
                     (first_within > 0 ? "; holds from rho=0." + std::to_string(first_within)
                                       : "")});
  long inversion_failures = 0;
  for (int j = 1; j <= 49; ++j) {
    const HighFloat eps = HighFloat(j) / 100;
    const HighFloat back = ImproveRatio(PredecessorOfTarget(eps));
    if (boost::multiprecision::abs(back - (1 - eps)) > HighFloat(1e-12)) ++inversion_failures;
  }
  out.push_back({"ratio-fixed-point-inversion", inversion_failures == 0,
                 Count(inversion_failures, 49) + " at tolerance 1e-12"});
  return out;
}

std::vector<CheckResult> PtasScheduleChecks() {
  std::vector<CheckResult> out;
  {
    const Schedule s = PtasSchedule(GreedyRatioLowerBound(), Ratio(1, 10));
    out.push_back({"ptas-iterations", s.iterations >= 262 && s.iterations <= 264,
                   "rho0=0.632120, eps=0.1: iterations=" + std::to_string(s.iterations) +
                       " (expected 263 +- 1), bound " +
                       ToDecimal(PtasIterationBoundUpper(GreedyRatioLowerBound(), Ratio(1, 10)), 4)});
  }
  {
    const Schedule s = PtasSchedule(Ratio(1, 2), Ratio(2, 5));
    const bool ok = s.convergence_count() == 1 && s.levels.back() == Ratio(3, 5);
    out.push_back({"ptas-single-level", ok,
                   "rho0=0.5, eps=0.4: " + std::to_string(s.convergence_count()) +
                       " level(s), reaching " + ToDecimal(s.levels.back())});
  }
  long points = 0;
  long over_bound = 0;
  long malformed = 0;
  std::string first;
  for (int i = 1; i <= 99; ++i) {
    for (int j = 1; j <= 50; ++j) {
      const Ratio rho0(i, 100);
      const Ratio eps(j, 100);
      if (eps > 1 - rho0) continue;
      ++points;
      const Schedule s = PtasSchedule(rho0, eps);
      if (s.convergence_count() > s.iterations) {
        ++over_bound;
        if (first.empty()) first = " first at rho0=" + ToDecimal(rho0, 2) + " eps=" + ToDecimal(eps, 2);
      }
      for (std::size_t l = 0; l < s.levels.size(); ++l) {
        if (s.levels[l] <= 0 || s.levels[l] >= 1 || (l > 0 && s.levels[l] <= s.levels[l - 1])) {
          ++malformed;
          break;
        }
      }
    }
  }
  out.push_back({"ptas-count-within-bound", over_bound == 0 && malformed == 0,
                 std::to_string(points) + " admissible grid points; " + std::to_string(over_bound) +
                     " exceed the loop bound, " + std::to_string(malformed) +
                     " non-monotone schedules" + first});
  return out;
}

CheckResult ReductionCheck(const std::vector<RationalInstance>& corpus, int ell,
                           std::uint64_t oracle_budget) {
  long ratio_failures = 0;
  long bound_failures = 0;
  long overcount_failures = 0;
  for (const RationalInstance& inst : corpus) {
    const ScaledInstance scaled = ScaleWeights(inst, ell);
    Weight max_scaled = 0;
    for (const Edge& e : scaled.instance.edges()) max_scaled = std::max(max_scaled, e.weight);
    if (max_scaled != scaled.receipt.bound) ++bound_failures;

    const CoverSolution on_scaled = SolveExact(scaled.instance, oracle_budget);
    const Ratio achieved = CoveredWeight(inst, on_scaled.vertices);
    const CoverSolution on_original = SolveExact(ClearDenominators(inst), oracle_budget);
    const Ratio opt = CoveredWeight(inst, on_original.vertices);
    if (achieved < RatioTransfer(Ratio(1), inst.order(), ell) * opt) ++ratio_failures;

    // Each ceiling adds less than one unit per covered edge.
    const EdgeSet covered = CoveredEdges(scaled.instance, on_scaled.vertices);
    Ratio excess = 0;
    for (int id = 0; id < scaled.instance.num_edges(); ++id) {
      if (!covered.test(id)) continue;
      excess += Ratio(BigInt(scaled.instance.edge(id).weight)) -
                Ratio(BigInt(scaled.receipt.bound)) * inst.edges[id].weight / scaled.receipt.w_max;
    }
    if (excess < 0 || excess > covered.count()) ++overcount_failures;
  }
  const long bad = ratio_failures + bound_failures + overcount_failures;
  return {"reduction-transfer", bad == 0,
          std::to_string(corpus.size()) + " instances at ell=" + std::to_string(ell) + "; " +
              std::to_string(ratio_failures) + " below (1 - 1/(4 n^(ell-2))) opt, " +
              std::to_string(bound_failures) + " with max scaled weight != n^ell, " +
              std::to_string(overcount_failures) + " over-count violations"};
}

CheckResult SemiRegularCheck(const std::vector<BipartiteInstance>& corpus,
                             std::uint64_t oracle_budget) {
  long mismatches = 0;
  for (const BipartiteInstance& inst : corpus) {
    if (SolveSemiRegularExact(inst).covered_weight != SolveExact(inst, oracle_budget).covered_weight) {
      ++mismatches;
    }
  }
  return {"semiregular-exactness", mismatches == 0,
          Count(mismatches, static_cast<long>(corpus.size()))};
}

CheckResult RoundTripCheck(const std::vector<RationalInstance>& corpus) {
  long mismatches = 0;
  for (const RationalInstance& inst : corpus) {
    std::stringstream buffer;
    WriteInstance(inst, buffer);
    if (!(ParseInstance(buffer) == inst)) ++mismatches;
  }
  return {"instance-io-roundtrip", mismatches == 0,
          Count(mismatches, static_cast<long>(corpus.size()))};
}

VerifyReport RunVerification(const VerifyOptions& options) {
  CorpusAuditor::Options audit;
  audit.ptas_depth = options.ptas_depth;
  audit.oracle_budget = options.oracle_budget;
  audit.prefix_checks = true;
  CorpusAuditor auditor(audit);
  ForEachExhaustiveInstance(
      options.small_n, [&](const BipartiteInstance& inst) { auditor.Audit(inst); },
      options.labeled_max_n);
  for (const BipartiteInstance& inst :
       RandomWeightedCorpus(options.random_count, options.random_max_n, options.seed)) {
    auditor.Audit(inst);
  }
  VerifyReport report;
  for (CheckResult& c : CorpusChecks(auditor.tally(), true)) report.checks.push_back(std::move(c));
  for (CheckResult& c : RatioFormulaChecks()) report.checks.push_back(std::move(c));
  for (CheckResult& c : PtasScheduleChecks()) report.checks.push_back(std::move(c));
  const std::vector<RationalInstance> rational =
      RandomRationalCorpus(options.reduction_count, options.reduction_max_n, options.seed + 1);
  report.checks.push_back(ReductionCheck(rational, options.reduction_ell, options.oracle_budget));
  report.checks.push_back(RoundTripCheck(rational));
  report.checks.push_back(SemiRegularCheck(
      SemiRegularCorpus(options.semiregular_count, options.semiregular_max_n, options.seed + 2),
      options.oracle_budget));
  return report;
}

void PrintReport(const VerifyReport& report, std::ostream& out) {
  int failed = 0;
  for (const CheckResult& c : report.checks) {
    out << (c.passed ? "PASS " : "FAIL ") << c.name << ": " << c.detail << '\n';
    if (!c.passed) ++failed;
  }
  out << (failed == 0 ? "all " + std::to_string(report.checks.size()) + " checks passed"
                      : std::to_string(failed) + " of " + std::to_string(report.checks.size()) +
                            " checks failed")
      << '\n';
}

}  // namespace mkvc
