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

#include <vector>

#include "gtest/gtest.h"
#include "mkvc/generate.h"
#include "mkvc/reduction.h"
#include "mkvc/solvers.h"

namespace mkvc {
namespace {

RationalInstance Rational(int n_left, int n_right, std::vector<RationalEdge> edges, int k) {
  RationalInstance inst;
  inst.n_left = n_left;
  inst.n_right = n_right;
  inst.edges = std::move(edges);
  inst.k = k;
  return inst;
}

TEST(ScaleWeightsTest, Examples) {
  const ScaledInstance scaled = ScaleWeights(Rational(2, 2, {{0, 0, 10}, {1, 1, 7}}, 1), 3);
  EXPECT_EQ(scaled.receipt.bound, 64u);
  EXPECT_EQ(scaled.receipt.w_max, 10);
  EXPECT_EQ(scaled.instance.edge(0).weight, 64u);
  EXPECT_EQ(scaled.instance.edge(1).weight, 45u);

  const ScaledInstance equal = ScaleWeights(Rational(1, 3, {{0, 0, 5}, {0, 1, 5}, {0, 2, 5}}, 1));
  for (const Edge& e : equal.instance.edges()) EXPECT_EQ(e.weight, 64u);

  const ScaledInstance zero = ScaleWeights(Rational(1, 2, {{0, 0, 0}, {0, 1, 3}}, 1));
  EXPECT_EQ(zero.instance.edge(0).weight, 0u);
  EXPECT_EQ(zero.instance.edge(1).weight, 27u);
}

TEST(ScaleWeightsTest, RationalWeights) {
  const ScaledInstance scaled =
      ScaleWeights(Rational(1, 1, {{0, 0, Ratio(7, 2)}}, 0), 3);
  EXPECT_EQ(scaled.instance.edge(0).weight, 8u);
  EXPECT_EQ(scaled.receipt.w_max, Ratio(7, 2));
}

TEST(ScaleWeightsTest, RejectsDegenerateInput) {
  EXPECT_THROW(ScaleWeights(Rational(1, 1, {}, 0)), InstanceError);
  EXPECT_THROW(ScaleWeights(Rational(1, 1, {{0, 0, 0}}, 0)), InstanceError);
  EXPECT_THROW(ScaleWeights(Rational(1, 1, {{0, 0, 1}}, 0), 2), InstanceError);
}

TEST(ScaleWeightsTest, IntegerOverload) {
  const BipartiteInstance inst(2, 2, {{0, 0, 10}, {1, 1, 7}}, 1);
  EXPECT_EQ(ScaleWeights(inst).instance.edge(1).weight, 45u);
}

TEST(RatioTransferTest, Examples) {
  EXPECT_EQ(RatioTransfer(Ratio(1), 10, 3), Ratio(39, 40));
  EXPECT_EQ(RatioTransfer(Ratio(9, 10), 2, 3), Ratio(31, 40));
  Ratio previous = 0;
  for (int ell = 3; ell < 12; ++ell) {
    const Ratio r = RatioTransfer(Ratio(1, 2), 5, ell);
    EXPECT_LT(r, Ratio(1, 2));
    EXPECT_GT(r, previous);
    previous = r;
  }
}

TEST(ClearDenominatorsTest, PreservesProportions) {
  const RationalInstance inst = Rational(2, 1, {{0, 0, Ratio(1, 2)}, {1, 0, Ratio(2, 3)}}, 1);
  const BipartiteInstance cleared = ClearDenominators(inst);
  EXPECT_EQ(cleared.edge(0).weight, 3u);
  EXPECT_EQ(cleared.edge(1).weight, 4u);
  EXPECT_FALSE(inst.IsIntegral());
  EXPECT_TRUE(ToRational(cleared).IsIntegral());
}

// Solving the scaled instance exactly loses at most a 1/(4n) fraction of the
// original optimum.
TEST(ReductionTest, ScaledOptimumTransfers) {
  Rng rng(51);
  for (int i = 0; i < 80; ++i) {
    GenSpec spec;
    const int n = static_cast<int>(rng.UniformInt(2, 9));
    spec.n_left = static_cast<int>(rng.UniformInt(1, n - 1));
    spec.n_right = n - spec.n_left;
    spec.k = static_cast<int>(rng.UniformInt(1, n - 1));
    spec.edge_prob = 0.6;
    spec.rational = true;
    spec.seed = rng.Next();
    const RationalInstance inst = Generate(spec);
    if (inst.edges.empty()) continue;
    const ScaledInstance scaled = ScaleWeights(inst, 3);
    Weight max_weight = 0;
    for (const Edge& e : scaled.instance.edges()) max_weight = std::max(max_weight, e.weight);
    EXPECT_EQ(max_weight, static_cast<Weight>(n * n * n));
    const Ratio achieved = CoveredWeight(inst, SolveExact(scaled.instance).vertices);
    const Ratio opt = CoveredWeight(inst, SolveExact(ClearDenominators(inst)).vertices);
    EXPECT_GE(achieved, RatioTransfer(Ratio(1), n, 3) * opt);
    EXPECT_LE(achieved, opt);
  }
}

}  // namespace
}  // namespace mkvc
