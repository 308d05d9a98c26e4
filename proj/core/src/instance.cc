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

#include "mkvc/instance.h"

#include <algorithm>
#include <bit>
#include <limits>
#include <numeric>
#include <unordered_set>

namespace mkvc {

const char* SideName(Side side) { return side == Side::kLeft ? "L" : "R"; }

std::string ToString(const VertexRef& v) {
  return std::string(SideName(v.side)) + std::to_string(v.index);
}

BipartiteInstance::BipartiteInstance(int n_left, int n_right, std::vector<Edge> edges,
                                     int k)
    : n_left_(n_left), n_right_(n_right), k_(k), edges_(std::move(edges)) {
  if (n_left < 0 || n_right < 0) throw InstanceError("negative side size");
  if (k < 0 || k >= n_left + n_right) {
    throw InstanceError("budget k=" + std::to_string(k) + " must satisfy 0 <= k < " +
                        std::to_string(n_left + n_right));
  }
  std::unordered_set<std::uint64_t> seen;
  seen.reserve(edges_.size());
  std::vector<int> degree(static_cast<size_t>(order()), 0);
  for (const Edge& e : edges_) {
    if (e.left < 0 || e.left >= n_left || e.right < 0 || e.right >= n_right) {
      throw InstanceError("edge (" + std::to_string(e.left) + "," +
                          std::to_string(e.right) + ") out of range");
    }
    const auto key = (static_cast<std::uint64_t>(e.left) << 32) |
                     static_cast<std::uint32_t>(e.right);
    if (!seen.insert(key).second) {
      throw InstanceError("duplicate edge (" + std::to_string(e.left) + "," +
                          std::to_string(e.right) + ")");
    }
    if (e.weight > std::numeric_limits<Weight>::max() - total_weight_) {
      throw InstanceError("total edge weight overflows 64-bit arithmetic");
    }
    total_weight_ += e.weight;
    ++degree[static_cast<size_t>(e.left)];
    ++degree[static_cast<size_t>(n_left + e.right)];
  }
  offsets_.assign(static_cast<size_t>(order()) + 1, 0);
  for (int v = 0; v < order(); ++v) {
    offsets_[static_cast<size_t>(v) + 1] = offsets_[static_cast<size_t>(v)] + degree[static_cast<size_t>(v)];
  }
  incident_.resize(2 * edges_.size());
  std::vector<int> cursor(offsets_.begin(), offsets_.end() - 1);
  for (int id = 0; id < num_edges(); ++id) {
    const Edge& e = edges_[static_cast<size_t>(id)];
    incident_[static_cast<size_t>(cursor[static_cast<size_t>(e.left)]++)] = id;
    incident_[static_cast<size_t>(cursor[static_cast<size_t>(n_left + e.right)]++)] = id;
  }
}

Weight BipartiteInstance::capacity(const VertexRef& v) const {
  Weight total = 0;
  for (int id : incident(v)) total += edge(id).weight;
  return total;
}

BipartiteInstance BipartiteInstance::WithBudget(int k) const {
  BipartiteInstance copy = *this;
  if (k < 0 || k >= order()) {
    throw InstanceError("budget k=" + std::to_string(k) + " must satisfy 0 <= k < " +
                        std::to_string(order()));
  }
  copy.k_ = k;
  return copy;
}

int EdgeSet::count() const {
  int total = 0;
  for (std::uint64_t w : words_) total += std::popcount(w);
  return total;
}

bool BetterSolution(const CoverSolution& a, const CoverSolution& b) {
  if (a.covered_weight != b.covered_weight) return a.covered_weight > b.covered_weight;
  return a.vertices < b.vertices;
}

EdgeSet CoveredEdges(const BipartiteInstance& inst, std::span<const VertexRef> vertices) {
  EdgeSet covered(inst.num_edges());
  for (const VertexRef& v : vertices) {
    if (!inst.IsValid(v)) throw InstanceError("vertex out of range: " + ToString(v));
    for (int id : inst.incident(v)) covered.set(id);
  }
  return covered;
}

Weight CoveredWeight(const BipartiteInstance& inst, std::span<const VertexRef> vertices) {
  const EdgeSet covered = CoveredEdges(inst, vertices);
  Weight total = 0;
  for (int id = 0; id < inst.num_edges(); ++id) {
    if (covered.test(id)) total += inst.edge(id).weight;
  }
  return total;
}

CoverSolution MakeSolution(const BipartiteInstance& inst, std::vector<VertexRef> vertices) {
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  const Weight value = CoveredWeight(inst, vertices);
  return CoverSolution{std::move(vertices), value};
}

VertexRef Residual::Lift(const VertexRef& v) const {
  const auto& origin = v.side == Side::kLeft ? left_origin : right_origin;
  return VertexRef{v.side, origin.at(static_cast<size_t>(v.index))};
}

std::vector<VertexRef> Residual::Lift(std::span<const VertexRef> vertices) const {
  std::vector<VertexRef> lifted;
  lifted.reserve(vertices.size());
  for (const VertexRef& v : vertices) lifted.push_back(Lift(v));
  return lifted;
}

Residual MakeResidual(const BipartiteInstance& inst, std::span<const VertexRef> removed,
                      int new_k) {
  std::vector<char> gone(static_cast<size_t>(inst.order()), 0);
  for (const VertexRef& v : removed) {
    if (!inst.IsValid(v)) throw InstanceError("vertex out of range: " + ToString(v));
    gone[static_cast<size_t>(inst.GlobalId(v))] = 1;
  }
  Residual out;
  std::vector<int> left_map(static_cast<size_t>(inst.n_left()), -1);
  std::vector<int> right_map(static_cast<size_t>(inst.n_right()), -1);
  for (int i = 0; i < inst.n_left(); ++i) {
    if (gone[static_cast<size_t>(i)]) continue;
    left_map[static_cast<size_t>(i)] = static_cast<int>(out.left_origin.size());
    out.left_origin.push_back(i);
  }
  for (int j = 0; j < inst.n_right(); ++j) {
    if (gone[static_cast<size_t>(inst.n_left() + j)]) continue;
    right_map[static_cast<size_t>(j)] = static_cast<int>(out.right_origin.size());
    out.right_origin.push_back(j);
  }
  std::vector<Edge> edges;
  for (int id = 0; id < inst.num_edges(); ++id) {
    const Edge& e = inst.edge(id);
    const int l = left_map[static_cast<size_t>(e.left)];
    const int r = right_map[static_cast<size_t>(e.right)];
    if (l < 0 || r < 0) continue;
    edges.push_back(Edge{l, r, e.weight});
    out.edge_origin.push_back(id);
  }
  const int remaining =
      static_cast<int>(out.left_origin.size() + out.right_origin.size());
  if (new_k < 0 || new_k >= remaining) {
    throw InstanceError("residual budget " + std::to_string(new_k) +
                        " out of range for " + std::to_string(remaining) +
                        " remaining vertices");
  }
  out.instance = BipartiteInstance(static_cast<int>(out.left_origin.size()),
                                   static_cast<int>(out.right_origin.size()),
                                   std::move(edges), new_k);
  return out;
}

namespace {

std::vector<VertexRef> RankSide(const BipartiteInstance& inst, Side side,
                                const EdgeSet* already_covered) {
  const int size = inst.side_size(side);
  std::vector<Weight> residual(static_cast<size_t>(size), 0);
  for (int i = 0; i < size; ++i) {
    for (int id : inst.incident(VertexRef{side, i})) {
      if (already_covered == nullptr || !already_covered->test(id)) {
        residual[static_cast<size_t>(i)] += inst.edge(id).weight;
      }
    }
  }
  std::vector<int> order(static_cast<size_t>(size));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return residual[static_cast<size_t>(a)] > residual[static_cast<size_t>(b)];
  });
  std::vector<VertexRef> ranked;
  ranked.reserve(order.size());
  for (int i : order) ranked.push_back(VertexRef{side, i});
  return ranked;
}

}  // namespace

std::vector<VertexRef> TopLOneSide(const BipartiteInstance& inst, Side side, int l,
                                   const EdgeSet& already_covered) {
  if (l < 0) throw InstanceError("negative selection size");
  std::vector<VertexRef> ranked = RankSide(inst, side, &already_covered);
  ranked.resize(std::min(ranked.size(), static_cast<size_t>(l)));
  std::sort(ranked.begin(), ranked.end());
  return ranked;
}

std::vector<VertexRef> TopLOneSide(const BipartiteInstance& inst, Side side, int l) {
  return TopLOneSide(inst, side, l, EdgeSet(inst.num_edges()));
}

std::vector<VertexRef> SortedByCapacity(const BipartiteInstance& inst, Side side) {
  return RankSide(inst, side, nullptr);
}

}  // namespace mkvc
