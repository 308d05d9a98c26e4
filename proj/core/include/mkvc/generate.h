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

// Seeded instance generators.

#ifndef MKVC_GENERATE_H_
#define MKVC_GENERATE_H_

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "mkvc/instance.h"
#include "mkvc/reduction.h"

namespace mkvc {

// mt19937_64 with distribution code of our own, so a seed yields the same
// stream on every standard library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t Next() { return engine_(); }
  // Uniform in [lo, hi].
  std::uint64_t UniformInt(std::uint64_t lo, std::uint64_t hi);
  // True with probability p.
  bool Bernoulli(double p);
  template <typename T>
  void Shuffle(std::vector<T>& items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      std::swap(items[i - 1], items[UniformInt(0, i - 1)]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

enum class GenKind { kUniformRandom, kSemiRegular, kGreedyAdversarial, kComplete };

// Parses "uniform", "semiregular", "adversarial" or "complete".
GenKind ParseGenKind(const std::string& name);

struct GenSpec {
  GenKind kind = GenKind::kUniformRandom;
  int n_left = 4;
  int n_right = 4;
  double edge_prob = 0.5;  // kUniformRandom
  int degree_left = 0;     // kSemiRegular; degree_right is derived when 0
  int degree_right = 0;
  Weight w_min = 1;
  Weight w_max = 100;
  std::uint64_t seed = 1;
  std::optional<int> k;    // defaults to ceil(n / 4)
  bool rational = false;   // emit non-integral weights
};

// Deterministic in the seed. kSemiRegular instances are unit weighted and
// side-regular; kGreedyAdversarial builds a k x k block where greedy prefers
// a chain of right hubs over the k left vertices of the optimum (order 3k,
// n_left/n_right ignored). Throws InstanceError on unrealizable specs.
RationalInstance Generate(const GenSpec& spec);

// Generate() for integer weights; throws when spec.rational is set.
BipartiteInstance GenerateInteger(const GenSpec& spec);

int DefaultBudget(int order);

}  // namespace mkvc

#endif  // MKVC_GENERATE_H_
