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

#include "mkvc/generate.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

#include "mkvc/instance_io.h"

namespace mkvc {

std::uint64_t Rng::UniformInt(std::uint64_t lo, std::uint64_t hi) {
  const std::uint64_t span = hi - lo;
  if (span == ~std::uint64_t{0}) return Next();
  const std::uint64_t range = span + 1;
  // Rejection sampling removes the modulo bias.
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % range);
  std::uint64_t x = Next();
  while (x >= limit) x = Next();
  return lo + x % range;
}

bool Rng::Bernoulli(double p) {
  const double u = static_cast<double>(Next() >> 11) * 0x1.0p-53;
  return u < p;
}

GenKind ParseGenKind(const std::string& name) {
  if (name == "uniform") return GenKind::kUniformRandom;
  if (name == "semiregular") return GenKind::kSemiRegular;
  if (name == "adversarial") return GenKind::kGreedyAdversarial;
  if (name == "complete") return GenKind::kComplete;
  throw InstanceError("unknown generator kind '" + name + "'");
}

int DefaultBudget(int order) {
  return std::clamp((order + 3) / 4, 1, std::max(order - 1, 1));
}

namespace {

int BudgetFor(const GenSpec& spec, int order) {
  const int k = spec.k.value_or(DefaultBudget(order));
  if (k < 1 || k >= order) throw InstanceError("k must satisfy 1 <= k < n");
  return k;
}

Ratio DrawWeight(const GenSpec& spec, Rng& rng) {
  if (!spec.rational) return Ratio(BigInt(rng.UniformInt(spec.w_min, spec.w_max)));
  const std::uint64_t den = rng.UniformInt(2, 12);
  const std::uint64_t num = rng.UniformInt(spec.w_min * den, spec.w_max * den);
  return Ratio(BigInt(num), BigInt(den));
}

void CheckSides(const GenSpec& spec) {
  if (spec.n_left < 1 || spec.n_right < 1) throw InstanceError("both sides must be non-empty");
  if (spec.w_min > spec.w_max) throw InstanceError("empty weight range");
}

RationalInstance UniformOrComplete(const GenSpec& spec, bool complete) {
  CheckSides(spec);
  Rng rng(spec.seed);
  RationalInstance inst{spec.n_left, spec.n_right, {}, 0};
  inst.k = BudgetFor(spec, inst.order());
  for (int l = 0; l < spec.n_left; ++l) {
    for (int r = 0; r < spec.n_right; ++r) {
      if (complete || rng.Bernoulli(spec.edge_prob)) {
        inst.edges.push_back(RationalEdge{l, r, DrawWeight(spec, rng)});
      }
    }
  }
  return inst;
}

RationalInstance SemiRegular(const GenSpec& spec) {
  CheckSides(spec);
  const int nl = spec.n_left;
  const int nr = spec.n_right;
  const int dl = spec.degree_left;
  int dr = spec.degree_right;
  if (dl < 0 || dr < 0) throw InstanceError("negative degree");
  if (dr == 0 && dl > 0) {
    if ((static_cast<long>(nl) * dl) % nr != 0) {
      throw InstanceError("unrealizable degree sequence: n_left*d_left not divisible by n_right");
    }
    dr = static_cast<int>(static_cast<long>(nl) * dl / nr);
  }
  if (static_cast<long>(nl) * dl != static_cast<long>(nr) * dr) {
    throw InstanceError("unrealizable degree sequence: n_left*d_left != n_right*d_right");
  }
  if (dl > nr || dr > nl) throw InstanceError("unrealizable degree sequence: degree too large");
  Rng rng(spec.seed);
  // Circulant start: left i takes the d_left consecutive right slots after
  // i*d_left (mod n_right), which makes every right degree equal to d_right.
  std::vector<std::pair<int, int>> edges;
  std::set<std::pair<int, int>> present;
  for (int l = 0; l < nl; ++l) {
    for (int t = 0; t < dl; ++t) {
      const int r = static_cast<int>((static_cast<long>(l) * dl + t) % nr);
      edges.emplace_back(l, r);
      present.emplace(l, r);
    }
  }
  // Degree-preserving switches randomize the structure.
  const int switches = static_cast<int>(edges.size()) * 4;
  for (int s = 0; s < switches && edges.size() >= 2; ++s) {
    const auto a = rng.UniformInt(0, edges.size() - 1);
    const auto b = rng.UniformInt(0, edges.size() - 1);
    auto [l1, r1] = edges[a];
    auto [l2, r2] = edges[b];
    if (l1 == l2 || r1 == r2) continue;
    if (present.count({l1, r2}) || present.count({l2, r1})) continue;
    present.erase({l1, r1});
    present.erase({l2, r2});
    edges[a] = {l1, r2};
    edges[b] = {l2, r1};
    present.emplace(l1, r2);
    present.emplace(l2, r1);
  }
  std::sort(edges.begin(), edges.end());
  RationalInstance inst{nl, nr, {}, 0};
  inst.k = BudgetFor(spec, inst.order());
  for (const auto& [l, r] : edges) inst.edges.push_back(RationalEdge{l, r, Ratio(1)});
  return inst;
}

RationalInstance GreedyAdversarial(const GenSpec& spec) {
  const int k = spec.k.value_or(3);
  if (k < 2) throw InstanceError("adversarial generator needs k >= 2");
  // Left 0..k-1 form the optimum. Right 0..k-1 are hubs joined to every left
  // vertex; hub j's edges weigh a_j = floor(S/k * (1-1/k)^j) + 1, so k*a_j
  // strictly beats the residual row weight S - a_0 - ... - a_{j-1} and greedy
  // takes the hubs in order. Right k..2k-1 are private leaves carrying the
  // rest of each row's weight S.
  const Weight row = std::max<Weight>(spec.w_max, 1) * static_cast<Weight>(k) * 1000;
  std::vector<Weight> hub(k);
  Weight hub_total = 0;
  double factor = 1.0;
  for (int j = 0; j < k; ++j) {
    hub[j] = static_cast<Weight>(std::floor(static_cast<double>(row) / k * factor)) + 1;
    hub_total += hub[j];
    factor *= 1.0 - 1.0 / k;
  }
  if (hub_total >= row) throw InstanceError("adversarial construction degenerate");
  const Weight leaf = row - hub_total;

  Rng rng(spec.seed);
  std::vector<int> left_label(k);
  std::vector<int> right_label(2 * k);
  std::iota(left_label.begin(), left_label.end(), 0);
  std::iota(right_label.begin(), right_label.end(), 0);
  rng.Shuffle(left_label);
  rng.Shuffle(right_label);

  RationalInstance inst{k, 2 * k, {}, k};
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      inst.edges.push_back(RationalEdge{left_label[i], right_label[j], Ratio(BigInt(hub[j]))});
    }
    inst.edges.push_back(RationalEdge{left_label[i], right_label[k + i], Ratio(BigInt(leaf))});
  }
  std::sort(inst.edges.begin(), inst.edges.end(), [](const RationalEdge& a, const RationalEdge& b) {
    return std::pair(a.left, a.right) < std::pair(b.left, b.right);
  });
  return inst;
}

}  // namespace

RationalInstance Generate(const GenSpec& spec) {
  RationalInstance inst;
  switch (spec.kind) {
    case GenKind::kUniformRandom:
      inst = UniformOrComplete(spec, false);
      break;
    case GenKind::kComplete:
      inst = UniformOrComplete(spec, true);
      break;
    case GenKind::kSemiRegular:
      inst = SemiRegular(spec);
      break;
    case GenKind::kGreedyAdversarial:
      inst = GreedyAdversarial(spec);
      break;
  }
  ClearDenominators(inst);  // validates topology
  return inst;
}

BipartiteInstance GenerateInteger(const GenSpec& spec) {
  if (spec.rational) throw InstanceError("rational weights requested");
  return ToIntegerInstance(Generate(spec));
}

}  // namespace mkvc
