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

#include "mkvc/analysis.h"

#include <algorithm>
#include <bit>
#include <map>
#include <mutex>
#include <utility>
#include <stdexcept>

namespace mkvc {
namespace {

constexpr unsigned kGridBits = 256;

Ratio Share(Weight part, Weight whole) {
  if (whole == 0) return Ratio(0);
  return Ratio(BigInt(part), BigInt(whole));
}

// One improvement step, rounded down onto the grid once the exact
// denominator outgrows it; the result never exceeds the exact iterate.
Ratio ImproveLowerBound(const Ratio& level) {
  const BigInt& den = boost::multiprecision::denominator(level);
  if ((den & (den - 1)) == 0 && msb(den) > kGridBits / 2 && msb(den) <= kGridBits) {
    // Fine dyadic level a / 2^B: ((a 2^B + u^2) / (2^2B + u^2)) with u = 2^B - a.
    const BigInt one = BigInt(1) << kGridBits;
    const BigInt a = boost::multiprecision::numerator(level) << (kGridBits - msb(den));
    const BigInt u = one - a;
    const BigInt u2 = u * u;
    const BigInt next = (a * one + u2) * one / (one * one + u2);
    return Ratio(next, one);
  }
  Ratio next = ImproveRatio(level);
  if (msb(boost::multiprecision::denominator(next)) > 2 * kGridBits) {
    next = FloorToGrid(next, kGridBits);
  }
  return next;
}

}  // namespace

Ratio ImproveRatioGap(const Ratio& rho) {
  const Ratio slack = 1 - rho;
  return Ratio(slack * slack * slack / (1 + slack * slack));
}

std::pair<Ratio, Ratio> SecondaryBounds(const Ratio& rho) {
  return {Ratio((1 + rho) / (3 - rho)), Ratio((1 + 3 * rho) / (5 - rho))};
}

Ratio CwLowerBound(const Ratio& rho, const Ratio& r, const Ratio& c_x) {
  if (rho <= 0) throw std::invalid_argument("rho must be positive");
  return Ratio((rho - r + (1 - rho) * c_x) / rho);
}

HighFloat PredecessorOfTarget(const HighFloat& epsilon) {
  using boost::multiprecision::sqrt;
  const HighFloat one(1);
  return (-(one - 2 * epsilon) + sqrt(one - 4 * epsilon * epsilon)) / (2 * epsilon);
}

Ratio PtasIterationBoundUpper(const Ratio& rho0, const Ratio& epsilon) {
  if (epsilon <= 0 || epsilon > Ratio(1, 2)) {
    throw std::invalid_argument("epsilon out of admissible range");
  }
  const Ratio numerator = 2 * epsilon * (1 - epsilon - rho0);
  // The denominator is positive for 0 < eps <= 1/2; an upper bound on the root
  // gives a lower bound on the denominator, hence an upper bound on the ratio.
  const Ratio denominator = 1 - 2 * epsilon * epsilon - SqrtUpper(1 - 4 * epsilon * epsilon, kGridBits);
  if (denominator <= 0) throw std::logic_error("insufficient precision for loop bound");
  return Ratio(numerator / denominator);
}

int PtasIterationBound(const Ratio& rho0, const Ratio& epsilon) {
  static std::mutex mutex;
  static std::map<std::pair<Ratio, Ratio>, int> cache;
  const std::lock_guard<std::mutex> lock(mutex);
  auto [it, inserted] = cache.try_emplace({rho0, epsilon}, 0);
  if (inserted) it->second = Ceil(PtasIterationBoundUpper(rho0, epsilon)).convert_to<int>();
  return it->second;
}

Ratio ComposedGuarantee(const Ratio& rho, int depth) {
  Ratio level = rho;
  for (int i = 0; i < depth; ++i) level = ImproveLowerBound(level);
  return level;
}

Schedule PtasSchedule(const Ratio& rho0, const Ratio& epsilon) {
  if (rho0 <= 0 || rho0 >= 1) throw std::invalid_argument("rho0 must lie in (0, 1)");
  if (epsilon <= 0 || epsilon > 1 - rho0 || epsilon > Ratio(1, 2)) {
    throw std::invalid_argument("epsilon out of admissible range");
  }
  Schedule schedule;
  schedule.rho0 = rho0;
  schedule.epsilon = epsilon;
  schedule.iterations = PtasIterationBound(rho0, epsilon);
  const Ratio target = 1 - epsilon;
  schedule.levels.push_back(rho0);
  // Each stored level is a lower bound of the exact iterate, so the count can
  // only be overestimated.
  while (schedule.levels.back() < target) {
    const Ratio next = ImproveLowerBound(schedule.levels.back());
    if (next <= schedule.levels.back()) throw std::logic_error("schedule stalled");
    schedule.levels.push_back(next);
  }
  return schedule;
}

OptimumProfile::OptimumProfile(const BipartiteInstance& inst, std::vector<VertexRef> optimum,
                               std::uint64_t oracle_budget)
    : OptimumProfile(Unchecked{}, inst, std::move(optimum)) {
  Build();
  const CoverSolution exact = SolveExact(inst, oracle_budget);
  if (static_cast<int>(optimum_.size()) != inst.k() || exact.covered_weight != opt()) {
    throw std::invalid_argument("given vertex set is not an optimal solution");
  }
}

OptimumProfile OptimumProfile::Trusted(const BipartiteInstance& inst,
                                       std::vector<VertexRef> optimum, Weight opt_value) {
  OptimumProfile profile(Unchecked{}, inst, std::move(optimum));
  profile.Build();
  if (profile.opt() != opt_value) throw std::invalid_argument("optimum value mismatch");
  return profile;
}

OptimumProfile::OptimumProfile(Unchecked, const BipartiteInstance& inst,
                               std::vector<VertexRef> optimum)
    : inst_(&inst), optimum_(std::move(optimum)) {}

void OptimumProfile::Build() {
  std::sort(optimum_.begin(), optimum_.end());
  optimum_.erase(std::unique(optimum_.begin(), optimum_.end()), optimum_.end());
  if (size() > kMaxOptimumSize) throw std::invalid_argument("optimal set too large to profile");
  const int s = size();
  std::vector<Weight> capacity(s);
  std::vector<int> gid(s);
  for (int i = 0; i < s; ++i) {
    if (!inst_->IsValid(optimum_[i])) throw InstanceError("vertex out of range");
    capacity[i] = inst_->capacity(optimum_[i]);
    gid[i] = inst_->GlobalId(optimum_[i]);
  }
  // shared[i][j]: weight of the edge between members i and j (0 if none).
  std::vector<std::vector<Weight>> shared(s, std::vector<Weight>(s, 0));
  for (int i = 0; i < s; ++i) {
    for (int id : inst_->incident(gid[i])) {
      const int other = inst_->Opposite(id, gid[i]);
      for (int j = 0; j < s; ++j) {
        if (gid[j] == other) shared[i][j] = inst_->edge(id).weight;
      }
    }
  }
  coverage_.assign(std::size_t{1} << s, 0);
  for (std::uint32_t mask = 1; mask < coverage_.size(); ++mask) {
    const int low = std::countr_zero(mask);
    const std::uint32_t rest = mask & (mask - 1);
    Weight value = coverage_[rest] + capacity[low];
    for (std::uint32_t r = rest; r != 0; r &= r - 1) value -= shared[low][std::countr_zero(r)];
    coverage_[mask] = value;
  }
}

std::uint32_t OptimumProfile::MaskOf(std::span<const VertexRef> subset) const {
  std::uint32_t mask = 0;
  for (const VertexRef& v : subset) {
    const auto it = std::lower_bound(optimum_.begin(), optimum_.end(), v);
    if (it == optimum_.end() || *it != v) {
      throw std::invalid_argument("X is not a subset of the optimal solution");
    }
    mask |= std::uint32_t{1} << (it - optimum_.begin());
  }
  return mask;
}

std::vector<VertexRef> OptimumProfile::Members(std::uint32_t mask) const {
  std::vector<VertexRef> out;
  for (int i = 0; i < size(); ++i) {
    if (mask >> i & 1U) out.push_back(optimum_[i]);
  }
  return out;
}

// Both scans visit masks in increasing order and keep the first extremum.
std::uint32_t OptimumProfile::BestOfSize(int s) const {
  std::uint32_t best = 0;
  bool found = false;
  for (std::uint32_t mask = 0; mask < coverage_.size(); ++mask) {
    if (std::popcount(mask) != s) continue;
    if (!found || coverage_[mask] > coverage_[best]) best = mask;
    found = true;
  }
  return best;
}

std::uint32_t OptimumProfile::WorstOfSize(int s) const {
  std::uint32_t worst = 0;
  bool found = false;
  for (std::uint32_t mask = 0; mask < coverage_.size(); ++mask) {
    if (std::popcount(mask) != s) continue;
    if (!found || coverage_[mask] < coverage_[worst]) worst = mask;
    found = true;
  }
  return worst;
}

SubsetStats OptimumProfile::Stats(int x_size) const {
  if (x_size < 0 || x_size > size()) throw std::invalid_argument("x_size out of range");
  SubsetStats stats;
  stats.opt_value = opt();
  stats.x_size = x_size;
  const std::uint32_t best = BestOfSize(x_size);
  const std::uint32_t worst = WorstOfSize(x_size);
  stats.c_best = Share(coverage_[best], opt());
  stats.c_worst = Share(coverage_[worst], opt());
  std::uint32_t left_mask = 0;
  for (int i = 0; i < size(); ++i) {
    if (optimum_[i].side == Side::kLeft) left_mask |= std::uint32_t{1} << i;
  }
  stats.alpha = Share(coverage_[left_mask], opt());
  stats.best_subset = Members(best);
  stats.worst_subset = Members(worst);
  return stats;
}

Prop1Report OptimumProfile::Prop1(std::uint32_t x_mask) const {
  const std::uint32_t full = static_cast<std::uint32_t>(coverage_.size() - 1);
  const std::uint32_t rest = full & ~x_mask;
  const int s = std::popcount(x_mask);
  const std::uint32_t worst = WorstOfSize(s);
  Prop1Report report;
  report.coverage_rest = coverage_[rest];
  report.threshold = opt() - coverage_[worst];
  report.holds = report.coverage_rest >= report.threshold;
  report.worst_subset_bound = coverage_[full & ~worst] >= report.threshold;
  report.best_subset_form = report.coverage_rest + coverage_[BestOfSize(s)] >= opt();
  report.x_is_worst = coverage_[x_mask] == coverage_[worst];

  // Private coverage of O \ X, straight from the edge list.
  std::vector<char> in_x(inst_->order(), 0);
  std::vector<char> in_rest(inst_->order(), 0);
  for (int i = 0; i < size(); ++i) {
    const int g = inst_->GlobalId(optimum_[i]);
    (x_mask >> i & 1U ? in_x : in_rest)[g] = 1;
  }
  Weight rest_private = 0;
  for (const Edge& e : inst_->edges()) {
    const int l = e.left;
    const int r = inst_->n_left() + e.right;
    if (in_x[l] || in_x[r]) continue;
    if (in_rest[l] || in_rest[r]) rest_private += e.weight;
  }
  report.partition_identity = coverage_[x_mask] + rest_private == opt();
  return report;
}

SubsetStats ComputeSubsetStats(const BipartiteInstance& inst,
                               const std::vector<VertexRef>& optimum, int x_size) {
  return OptimumProfile(inst, optimum).Stats(x_size);
}

Prop1Report CheckProp1(const BipartiteInstance& inst, const std::vector<VertexRef>& optimum,
                       const std::vector<VertexRef>& x) {
  const OptimumProfile profile(inst, optimum);
  return profile.Prop1(profile.MaskOf(x));
}

}  // namespace mkvc
