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

#ifndef MKVC_RESIDUAL_VIEW_H_
#define MKVC_RESIDUAL_VIEW_H_

#include <span>
#include <vector>

#include "mkvc/instance.h"

namespace mkvc {

// Lightweight residual subproblem over a fixed instance: the vertices still
// available, the edges already covered, and the remaining budget.
//
// Taking a vertex removes it and covers its edges, which is what the residual
// instance construction does, without re-indexing. Vertex sets are global ids
// (see BipartiteInstance::GlobalId); ascending global id is lexicographic
// VertexRef order. A solver run on a view must return exactly budget() distinct
// active vertices.
class ResidualView {
 public:
  explicit ResidualView(const BipartiteInstance& inst);
  ResidualView(const BipartiteInstance& inst, int budget);

  const BipartiteInstance& instance() const { return *inst_; }
  int budget() const { return budget_; }
  void set_budget(int budget);

  bool active(int v) const { return active_[v] != 0; }
  int num_active() const { return num_active_[0] + num_active_[1]; }
  int num_active(Side side) const { return num_active_[static_cast<int>(side)]; }

  // Weight of uncovered edges incident to v.
  Weight gain(int v) const { return gain_[v]; }
  const EdgeSet& covered() const { return covered_; }

  // Weight of uncovered edges touched by `vertices` (shared edges once).
  Weight GainOf(std::span<const int> vertices) const;

  // Removes v from the available vertices and covers its edges.
  void Take(int v);
  void Take(std::span<const int> vertices) {
    for (int v : vertices) Take(v);
  }

 private:
  const BipartiteInstance* inst_;
  std::vector<char> active_;
  std::vector<Weight> gain_;
  EdgeSet covered_;
  int budget_;
  int num_active_[2];
};

}  // namespace mkvc

#endif  // MKVC_RESIDUAL_VIEW_H_
