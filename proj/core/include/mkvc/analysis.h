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

// Analytic quantities behind the ratio-improvement argument, as exact
// computations: coverage shares of optimal subsets, the ratio map of the
// improvement step and the iteration schedule of its self-composition.

#ifndef MKVC_ANALYSIS_H_
#define MKVC_ANALYSIS_H_

#include <cstdint>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "mkvc/instance.h"
#include "mkvc/ratio.h"
#include "mkvc/solvers.h"

namespace mkvc {

// 113-bit mantissa floating point.
using HighFloat = boost::multiprecision::cpp_bin_float_quad;

// Ratio guaranteed by one improvement pass over a rho-approximation:
// (rho + (1 - rho)^2) / (1 + (1 - rho)^2).
template <typename T>
T ImproveRatio(const T& rho) {
  const T slack = T(1) - rho;
  const T slack_sq = slack * slack;
  return T((rho + slack_sq) / (T(1) + slack_sq));
}

// (1 - rho)^3 / (1 + (1 - rho)^2), which equals ImproveRatio(rho) - rho.
Ratio ImproveRatioGap(const Ratio& rho);

// The two other case bounds of the improvement argument:
// ((1 + rho) / (3 - rho), (1 + 3 rho) / (5 - rho)).
std::pair<Ratio, Ratio> SecondaryBounds(const Ratio& rho);

// Lower bound (rho - r + (1 - rho) c_x) / rho on the worst-subset share, given
// that the prefix algorithm achieved ratio at most r. May be negative.
Ratio CwLowerBound(const Ratio& rho, const Ratio& r, const Ratio& c_x);

// Fixed point preimage: the rho with ImproveRatio(rho) = 1 - epsilon,
// (-(1 - 2 eps) + sqrt(1 - 4 eps^2)) / (2 eps).
HighFloat PredecessorOfTarget(const HighFloat& epsilon);

// Rational upper bound on 2 eps (1 - eps - rho) / (1 - 2 eps^2 - sqrt(1 - 4 eps^2)),
// obtained by rounding the square root up.
Ratio PtasIterationBoundUpper(const Ratio& rho0, const Ratio& epsilon);

// Ceiling of PtasIterationBoundUpper.
int PtasIterationBound(const Ratio& rho0, const Ratio& epsilon);

// Guarantee after `depth` compositions of the improvement pass starting from
// rho. Exact while the rationals stay small, then rounded down onto a 2^-256
// grid; the result never exceeds the exact value.
Ratio ComposedGuarantee(const Ratio& rho, int depth);

struct Schedule {
  Ratio rho0;
  Ratio epsilon;
  std::vector<Ratio> levels;  // rho0 < rho1 < ... ; last one >= 1 - epsilon
  int iterations = 0;         // ceiling of the closed-form loop bound

  // Improvement passes actually needed to reach 1 - epsilon.
  int convergence_count() const { return static_cast<int>(levels.size()) - 1; }
};

// Throws std::invalid_argument unless 0 < rho0 < 1 and
// 0 < epsilon <= min(1 - rho0, 1/2).
Schedule PtasSchedule(const Ratio& rho0, const Ratio& epsilon);

// Coverage statistics of |X|-element subsets of an optimal solution O.
struct SubsetStats {
  Weight opt_value = 0;
  int x_size = 0;
  Ratio c_best;   // best |X|-subset coverage / opt
  Ratio c_worst;  // worst |X|-subset coverage / opt
  Ratio alpha;    // coverage of O restricted to the left side / opt
  std::vector<VertexRef> best_subset;
  std::vector<VertexRef> worst_subset;
};

struct Prop1Report {
  // coverage(O \ X) >= (1 - C_w(|X|)) * opt, evaluated for the given X.
  bool holds = false;
  // coverage(X) + private coverage of O \ X (edges missing X) == opt.
  bool partition_identity = false;
  // coverage(O \ W) >= (1 - C_w(|X|)) * opt for a worst |X|-subset W.
  bool worst_subset_bound = false;
  // coverage(O \ X) >= (1 - C(|X|)) * opt with the best |X|-subset share.
  bool best_subset_form = false;
  bool x_is_worst = false;
  Weight coverage_rest = 0;  // coverage(O \ X)
  Weight threshold = 0;      // (1 - C_w(|X|)) * opt
};

// Coverage of every subset of a fixed optimal solution O (|O| <= 20).
class OptimumProfile {
 public:
  static constexpr int kMaxOptimumSize = 20;

  // Re-verifies optimality with the exhaustive oracle; throws
  // std::invalid_argument when O is not optimal or too large.
  OptimumProfile(const BipartiteInstance& inst, std::vector<VertexRef> optimum,
                 std::uint64_t oracle_budget = kDefaultOracleBudget);
  // Trusts `optimum` to be optimal; only checks its coverage equals `opt_value`.
  static OptimumProfile Trusted(const BipartiteInstance& inst, std::vector<VertexRef> optimum,
                                Weight opt_value);

  const std::vector<VertexRef>& optimum() const { return optimum_; }
  Weight opt() const { return coverage_.back(); }
  int size() const { return static_cast<int>(optimum_.size()); }

  // Subsets of O are bitmasks over positions in optimum().
  std::uint32_t MaskOf(std::span<const VertexRef> subset) const;
  std::vector<VertexRef> Members(std::uint32_t mask) const;
  Weight Coverage(std::uint32_t mask) const { return coverage_[mask]; }
  std::uint32_t BestOfSize(int s) const;
  std::uint32_t WorstOfSize(int s) const;

  SubsetStats Stats(int x_size) const;
  Prop1Report Prop1(std::uint32_t x_mask) const;

 private:
  struct Unchecked {};
  OptimumProfile(Unchecked, const BipartiteInstance& inst, std::vector<VertexRef> optimum);
  void Build();

  const BipartiteInstance* inst_;
  std::vector<VertexRef> optimum_;
  std::vector<Weight> coverage_;
};

// SubsetStats for x_size-subsets of an oracle-verified optimum.
SubsetStats ComputeSubsetStats(const BipartiteInstance& inst,
                               const std::vector<VertexRef>& optimum, int x_size);

// Checks the coverage identity for X subset of O; throws std::invalid_argument
// when X is not a subset of O or O is not optimal.
Prop1Report CheckProp1(const BipartiteInstance& inst, const std::vector<VertexRef>& optimum,
                       const std::vector<VertexRef>& x);

}  // namespace mkvc

#endif  // MKVC_ANALYSIS_H_
