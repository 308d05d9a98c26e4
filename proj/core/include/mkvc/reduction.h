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

// Weight-scaling reduction to instances with polynomially bounded integer
// weights, and the ratio it preserves.

#ifndef MKVC_REDUCTION_H_
#define MKVC_REDUCTION_H_

#include <span>
#include <string>
#include <vector>

#include "mkvc/instance.h"
#include "mkvc/ratio.h"

namespace mkvc {

struct RationalEdge {
  int left = 0;
  int right = 0;
  Ratio weight;

  friend bool operator==(const RationalEdge&, const RationalEdge&) = default;
};

// Bipartite instance whose edge weights are arbitrary non-negative rationals.
// Only the harness accepts these; solvers run on the scaled integer instance.
struct RationalInstance {
  int n_left = 0;
  int n_right = 0;
  std::vector<RationalEdge> edges;
  int k = 0;

  int order() const { return n_left + n_right; }
  bool IsIntegral() const;

  friend bool operator==(const RationalInstance&, const RationalInstance&) = default;
};

RationalInstance ToRational(const BipartiteInstance& inst);

// Exact integer instance with the same topology, each weight multiplied by
// the least common denominator. Has the same optimal sets as `inst`.
BipartiteInstance ClearDenominators(const RationalInstance& inst);

// Exact covered weight under the rational weights.
Ratio CoveredWeight(const RationalInstance& inst, std::span<const VertexRef> vertices);

struct ReductionReceipt {
  int ell = 3;
  Ratio w_max;
  int n = 0;          // n_left + n_right
  Weight bound = 0;   // n^ell
  std::string scale_note;
};

struct ScaledInstance {
  BipartiteInstance instance;
  ReductionReceipt receipt;
};

// Replaces every weight w by ceil(n^ell * w / w_max), exactly. Throws
// InstanceError("degenerate instance") when every weight is zero or there are
// no edges, and when ell < 3 or n^ell does not fit a Weight.
ScaledInstance ScaleWeights(const RationalInstance& inst, int ell = 3);
ScaledInstance ScaleWeights(const BipartiteInstance& inst, int ell = 3);

// rho - 1 / (4 n^(ell-2)): ratio guaranteed on the original weights when the
// scaled instance is solved within rho.
Ratio RatioTransfer(const Ratio& rho, int n, int ell);

}  // namespace mkvc

#endif  // MKVC_REDUCTION_H_
