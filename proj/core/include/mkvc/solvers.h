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

// Solvers for max k-vertex cover on bipartite graphs.
//
// Every solver runs on a ResidualView. Alg1, Alg2 and the PTAS call their
// base solver on residual subproblems.

#ifndef MKVC_SOLVERS_H_
#define MKVC_SOLVERS_H_

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "mkvc/instance.h"
#include "mkvc/ratio.h"
#include "mkvc/residual_view.h"

namespace mkvc {

inline constexpr std::uint64_t kDefaultOracleBudget = 2'000'000;

enum class SolverKind {
  kGreedy,
  kTopSide,
  kAlg1,  // best-prefix removal, then the base on the residual
  kAlg2,  // prefix completion plus small-subset enumeration around the base
  kPtas,  // Alg2 composed with itself
  kExact,
  kSemiRegular,
};

class SolverError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Thrown when exhaustive enumeration would exceed the subset budget.
class OracleTooLarge : public SolverError {
 public:
  OracleTooLarge() : SolverError("instance too large for oracle") {}
};

struct SolverSpec {
  SolverKind kind = SolverKind::kGreedy;
  // Black-box algorithm A for Alg1, Alg2 and Ptas.
  std::shared_ptr<const SolverSpec> base;
  int c = 3;        // Alg2 enumeration constant, c > 2
  int x_size = 0;   // Alg1 prefix size
  Side side = Side::kLeft;  // TopSide / Alg1 prefix side
  // TopSide / Alg1: pool every split k' + k'' = k over both sides instead of
  // using `side` and `x_size`.
  bool guess_split = false;
  Ratio epsilon = Ratio(1, 10);  // Ptas target 1 - epsilon
  int max_depth = 2;             // Ptas composition cap
  std::uint64_t oracle_budget = kDefaultOracleBudget;

  static SolverSpec Greedy();
  static SolverSpec Exact(std::uint64_t oracle_budget = kDefaultOracleBudget);
  static SolverSpec SemiRegular();
  static SolverSpec TopSide(Side side);
  static SolverSpec TopSideSplit();
  static SolverSpec Alg1(int x_size, SolverSpec base, Side side = Side::kLeft);
  static SolverSpec Alg1Split(SolverSpec base);
  static SolverSpec Alg2(int c, SolverSpec base);
  static SolverSpec Ptas(Ratio epsilon, SolverSpec base, int max_depth = 2, int c = 3);

  // Short CSV-safe name, e.g. "alg2(c=3;greedy)".
  std::string Label() const;
};

// Throws SolverError when parameters violate their constraints.
void Validate(const SolverSpec& spec);

// Proven approximation guarantee, if the algorithm carries one. TopSide and
// Alg1 have none.
std::optional<Ratio> Guarantee(const SolverSpec& spec);

// A solver together with the guarantee it carries.
struct RatedSolver {
  SolverSpec spec;
  Ratio rho;

  // Throws SolverError when `spec` carries no guarantee.
  static RatedSolver Of(SolverSpec spec);
};

// Runs `spec` on the subproblem; returns ascending global ids of the chosen
// vertices (exactly view.budget() of them, except plain TopSide which may
// return fewer).
std::vector<int> RunOnView(const SolverSpec& spec, const ResidualView& view);

// Runs `spec` on the full instance and recomputes the covered weight.
CoverSolution Solve(const SolverSpec& spec, const BipartiteInstance& inst);

// k rounds, each taking the vertex of largest residual capacity on either
// side (ties: Left first, then index).
CoverSolution SolveGreedy(const BipartiteInstance& inst);

// The min(k, |side|) vertices of `side` with the largest capacities. The
// budget is not spilled onto the other side.
CoverSolution SolveTopSide(const BipartiteInstance& inst, Side side);

CoverSolution SolveAlg1(const BipartiteInstance& inst, int x_size, const RatedSolver& base,
                        Side side = Side::kLeft);

CoverSolution SolveAlg2(const BipartiteInstance& inst, int c, const RatedSolver& base);

struct PtasRun {
  CoverSolution solution;
  int schedule_iterations = 0;  // closed-form loop bound for the target
  int executed_depth = 0;       // min(schedule_iterations, max_depth)
  Ratio guarantee;              // ratio carried at the executed depth
  Ratio target;                 // 1 - epsilon

  bool reaches_target() const { return guarantee >= target; }
};

PtasRun SolvePtas(const BipartiteInstance& inst, const Ratio& epsilon, const RatedSolver& base,
                  int max_depth);

// Exhaustive enumeration of all k-subsets; ties go to the lexicographically
// smallest set. Throws OracleTooLarge when C(n, k) > oracle_budget.
CoverSolution SolveExact(const BipartiteInstance& inst,
                         std::uint64_t oracle_budget = kDefaultOracleBudget);

// True when all edges weigh the same and each side is degree-regular.
bool IsSemiRegularUnweighted(const BipartiteInstance& inst);

// Takes k vertices of the larger-degree class, or that whole class plus
// greedy completion when it is smaller than k. Throws SolverError("not
// semi-regular/unweighted") otherwise.
CoverSolution SolveSemiRegularExact(const BipartiteInstance& inst);

// One run of a procedure for a fixed split of the budget between the sides;
// nullopt when the split is infeasible for that procedure.
using SplitProcedure = std::function<std::optional<CoverSolution>(int k_left, int k_right)>;

// Runs `inner` on every split k' + k'' = k, 0 <= k' <= k, and keeps the best.
CoverSolution GuessSplitRunner(const BipartiteInstance& inst, const SplitProcedure& inner);

// min(C(n, r), cap + 1) without overflow.
std::uint64_t BinomialCapped(int n, int r, std::uint64_t cap);

}  // namespace mkvc

#endif  // MKVC_SOLVERS_H_
