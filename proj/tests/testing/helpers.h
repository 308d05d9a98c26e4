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

#ifndef MKVC_TESTS_TESTING_HELPERS_H_
#define MKVC_TESTS_TESTING_HELPERS_H_

#include <bit>
#include <cstdint>
#include <vector>

#include "mkvc/generate.h"
#include "mkvc/instance.h"

namespace mkvc::testing {

inline BipartiteInstance CompleteUnit(int n_left, int n_right, int k) {
  std::vector<Edge> edges;
  for (int i = 0; i < n_left; ++i) {
    for (int j = 0; j < n_right; ++j) edges.push_back({i, j, 1});
  }
  return BipartiteInstance(n_left, n_right, std::move(edges), k);
}

// Coverage of the vertex set given as a bitmask over global ids.
inline Weight MaskCoverage(const BipartiteInstance& inst, std::uint32_t mask) {
  Weight total = 0;
  for (const Edge& e : inst.edges()) {
    if ((mask >> e.left & 1U) || (mask >> (inst.n_left() + e.right) & 1U)) total += e.weight;
  }
  return total;
}

// Optimum by scanning every k-bit mask; written independently of the library
// oracle so the two can cross-check each other.
inline Weight BruteForceOptimum(const BipartiteInstance& inst) {
  const int n = inst.order();
  Weight best = 0;
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
    if (std::popcount(mask) != inst.k()) continue;
    best = std::max(best, MaskCoverage(inst, mask));
  }
  return best;
}

inline std::vector<BipartiteInstance> RandomInstances(int count, int max_n, std::uint64_t seed,
                                                      int max_k = 0) {
  Rng rng(seed);
  std::vector<BipartiteInstance> out;
  for (int i = 0; i < count; ++i) {
    GenSpec spec;
    const int n = static_cast<int>(rng.UniformInt(2, max_n));
    spec.n_left = static_cast<int>(rng.UniformInt(1, n - 1));
    spec.n_right = n - spec.n_left;
    spec.edge_prob = 0.25 + 0.5 * static_cast<double>(rng.UniformInt(0, 100)) / 100.0;
    const int k_cap = max_k > 0 ? std::min(max_k, n - 1) : n - 1;
    spec.k = static_cast<int>(rng.UniformInt(1, k_cap));
    spec.seed = rng.Next();
    out.push_back(GenerateInteger(spec));
  }
  return out;
}

}  // namespace mkvc::testing

#endif  // MKVC_TESTS_TESTING_HELPERS_H_
