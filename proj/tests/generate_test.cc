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

#include <cmath>
#include <map>
#include <vector>

#include "gtest/gtest.h"
#include "mkvc/generate.h"
#include "mkvc/solvers.h"

namespace mkvc {
namespace {

TEST(GenerateTest, CompleteUnitIsK22) {
  GenSpec spec;
  spec.kind = GenKind::kComplete;
  spec.n_left = 2;
  spec.n_right = 2;
  spec.w_min = 1;
  spec.w_max = 1;
  spec.k = 2;
  const BipartiteInstance inst = GenerateInteger(spec);
  const BipartiteInstance k22(2, 2, {{0, 0, 1}, {0, 1, 1}, {1, 0, 1}, {1, 1, 1}}, 2);
  EXPECT_EQ(inst, k22);
}

TEST(GenerateTest, SameSeedSameInstance) {
  for (GenKind kind : {GenKind::kUniformRandom, GenKind::kSemiRegular, GenKind::kGreedyAdversarial,
                       GenKind::kComplete}) {
    GenSpec spec;
    spec.kind = kind;
    spec.n_left = 6;
    spec.n_right = 4;
    spec.degree_left = 2;
    spec.seed = 99;
    EXPECT_EQ(Generate(spec), Generate(spec));
    GenSpec other = spec;
    other.seed = 100;
    if (kind == GenKind::kUniformRandom) {
      EXPECT_FALSE(Generate(spec) == Generate(other));
    }
  }
}

TEST(GenerateTest, DefaultBudgetIsQuarterOfOrder) {
  EXPECT_EQ(DefaultBudget(8), 2);
  EXPECT_EQ(DefaultBudget(9), 3);
  EXPECT_EQ(DefaultBudget(2), 1);
  GenSpec spec;
  spec.n_left = 5;
  spec.n_right = 5;
  EXPECT_EQ(Generate(spec).k, 3);
}

TEST(GenerateTest, WeightsStayInRange) {
  GenSpec spec;
  spec.n_left = 8;
  spec.n_right = 8;
  spec.edge_prob = 1.0;
  spec.w_min = 5;
  spec.w_max = 9;
  const BipartiteInstance inst = GenerateInteger(spec);
  EXPECT_EQ(inst.num_edges(), 64);
  for (const Edge& e : inst.edges()) {
    EXPECT_GE(e.weight, 5u);
    EXPECT_LE(e.weight, 9u);
  }
}

TEST(GenerateTest, SemiRegularDegrees) {
  GenSpec spec;
  spec.kind = GenKind::kSemiRegular;
  spec.n_left = 6;
  spec.n_right = 9;
  spec.degree_left = 3;
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    spec.seed = seed;
    const BipartiteInstance inst = GenerateInteger(spec);
    std::vector<int> degree(15, 0);
    for (const Edge& e : inst.edges()) {
      EXPECT_EQ(e.weight, 1u);
      ++degree[e.left];
      ++degree[6 + e.right];
    }
    for (int i = 0; i < 6; ++i) EXPECT_EQ(degree[i], 3);
    for (int j = 0; j < 9; ++j) EXPECT_EQ(degree[6 + j], 2);
    EXPECT_TRUE(IsSemiRegularUnweighted(inst));
  }
}

TEST(GenerateTest, RejectsUnrealizableDegrees) {
  GenSpec spec;
  spec.kind = GenKind::kSemiRegular;
  spec.n_left = 3;
  spec.n_right = 4;
  spec.degree_left = 3;
  spec.degree_right = 3;
  EXPECT_THROW(Generate(spec), InstanceError);
  spec.degree_right = 0;
  spec.degree_left = 3;
  EXPECT_THROW(Generate(spec), InstanceError);
  spec.n_right = 2;
  spec.degree_left = 4;
  EXPECT_THROW(Generate(spec), InstanceError);
}

TEST(GenerateTest, RationalWeightsAreFractional) {
  GenSpec spec;
  spec.n_left = 5;
  spec.n_right = 5;
  spec.edge_prob = 1.0;
  spec.rational = true;
  const RationalInstance inst = Generate(spec);
  EXPECT_FALSE(inst.IsIntegral());
  for (const RationalEdge& e : inst.edges) EXPECT_GT(e.weight, 0);
}

TEST(GenerateTest, ParseKind) {
  EXPECT_EQ(ParseGenKind("uniform"), GenKind::kUniformRandom);
  EXPECT_EQ(ParseGenKind("semiregular"), GenKind::kSemiRegular);
  EXPECT_EQ(ParseGenKind("adversarial"), GenKind::kGreedyAdversarial);
  EXPECT_EQ(ParseGenKind("complete"), GenKind::kComplete);
  EXPECT_THROW(ParseGenKind("petersen"), InstanceError);
}

// The adversarial family drives greedy towards 1 - (1 - 1/k)^k of the optimum.
TEST(GenerateTest, AdversarialIsTightForGreedy) {
  for (int k = 2; k <= 4; ++k) {
    GenSpec spec;
    spec.kind = GenKind::kGreedyAdversarial;
    spec.k = k;
    spec.seed = 5;
    const BipartiteInstance inst = GenerateInteger(spec);
    const double ratio = static_cast<double>(SolveGreedy(inst).covered_weight) /
                         static_cast<double>(SolveExact(inst).covered_weight);
    const double tight = 1.0 - std::pow(1.0 - 1.0 / k, k);
    EXPECT_LT(ratio, tight + 0.02) << "k=" << k;
    EXPECT_GE(ratio, tight - 1e-9) << "k=" << k;
  }
}

TEST(RngTest, UniformIntCoversRange) {
  Rng rng(7);
  std::map<std::uint64_t, int> seen;
  for (int i = 0; i < 6000; ++i) ++seen[rng.UniformInt(3, 8)];
  EXPECT_EQ(seen.size(), 6u);
  for (const auto& [value, count] : seen) {
    EXPECT_GE(value, 3u);
    EXPECT_LE(value, 8u);
    EXPECT_GT(count, 800);
  }
}

}  // namespace
}  // namespace mkvc
