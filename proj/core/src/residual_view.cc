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

#include "mkvc/residual_view.h"

#include <algorithm>

namespace mkvc {

ResidualView::ResidualView(const BipartiteInstance& inst) : ResidualView(inst, inst.k()) {}

ResidualView::ResidualView(const BipartiteInstance& inst, int budget)
    : inst_(&inst),
      active_(inst.order(), 1),
      gain_(inst.order(), 0),
      covered_(inst.num_edges()),
      budget_(0),
      num_active_{inst.n_left(), inst.n_right()} {
  for (const Edge& e : inst.edges()) {
    gain_[e.left] += e.weight;
    gain_[inst.n_left() + e.right] += e.weight;
  }
  set_budget(budget);
}

void ResidualView::set_budget(int budget) {
  if (budget < 0 || budget > num_active()) {
    throw InstanceError("budget " + std::to_string(budget) + " exceeds the " +
                        std::to_string(num_active()) + " available vertices");
  }
  budget_ = budget;
}

Weight ResidualView::GainOf(std::span<const int> vertices) const {
  Weight total = 0;
  for (int v : vertices) {
    for (int id : inst_->incident(v)) {
      if (covered_.test(id)) continue;
      const int other = inst_->Opposite(id, v);
      // An edge between two members is counted from its left endpoint only.
      const bool shared =
          std::find(vertices.begin(), vertices.end(), other) != vertices.end();
      if (!shared || v < other) total += inst_->edge(id).weight;
    }
  }
  return total;
}

void ResidualView::Take(int v) {
  if (!active_[v]) throw InstanceError("vertex taken twice");
  active_[v] = 0;
  --num_active_[v < inst_->n_left() ? 0 : 1];
  for (int id : inst_->incident(v)) {
    if (covered_.test(id)) continue;
    covered_.set(id);
    const Weight w = inst_->edge(id).weight;
    gain_[v] -= w;
    gain_[inst_->Opposite(id, v)] -= w;
  }
}

}  // namespace mkvc
