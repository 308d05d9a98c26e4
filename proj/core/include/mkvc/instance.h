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

// Edge-weighted bipartite instances of max k-vertex cover, exact coverage
// arithmetic, residual graphs, and per-side top-l selection.

#ifndef MKVC_INSTANCE_H_
#define MKVC_INSTANCE_H_

#include <compare>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace mkvc {

using Weight = std::uint64_t;

enum class Side : std::uint8_t { kLeft = 0, kRight = 1 };

inline Side Other(Side side) {
  return side == Side::kLeft ? Side::kRight : Side::kLeft;
}
const char* SideName(Side side);

// Vertex identified by its color class and 0-based index within that class.
// The natural ordering (Left before Right, then index) is the lexicographic
// order used for every deterministic tie-break.
struct VertexRef {
  Side side = Side::kLeft;
  int index = 0;

  friend auto operator<=>(const VertexRef&, const VertexRef&) = default;
};

std::string ToString(const VertexRef& v);

struct Edge {
  int left = 0;
  int right = 0;
  Weight weight = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

class InstanceError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Immutable bipartite instance B(L, R, E, w) with budget k.
//
// Edges keep the ids they were given in (position in the constructor's edge
// list). Vertices also have a global id: left vertex i is i, right vertex j is
// n_left + j, so increasing global id is the lexicographic VertexRef order.
class BipartiteInstance {
 public:
  BipartiteInstance() = default;
  // Throws InstanceError unless 0 <= k < n_left + n_right, every endpoint is
  // in range, no (left, right) pair repeats and the total weight fits in a
  // Weight.
  BipartiteInstance(int n_left, int n_right, std::vector<Edge> edges, int k);

  int n_left() const { return n_left_; }
  int n_right() const { return n_right_; }
  int order() const { return n_left_ + n_right_; }
  int side_size(Side side) const {
    return side == Side::kLeft ? n_left_ : n_right_;
  }
  int k() const { return k_; }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(int id) const { return edges_[static_cast<size_t>(id)]; }
  Weight total_weight() const { return total_weight_; }

  bool IsValid(const VertexRef& v) const {
    return v.index >= 0 && v.index < side_size(v.side);
  }
  int GlobalId(const VertexRef& v) const {
    return v.side == Side::kLeft ? v.index : n_left_ + v.index;
  }
  VertexRef VertexAt(int global_id) const {
    return global_id < n_left_ ? VertexRef{Side::kLeft, global_id}
                               : VertexRef{Side::kRight, global_id - n_left_};
  }
  // Ids of edges incident to the vertex with the given global id.
  std::span<const int> incident(int global_id) const {
    const auto begin = static_cast<size_t>(offsets_[static_cast<size_t>(global_id)]);
    const auto end = static_cast<size_t>(offsets_[static_cast<size_t>(global_id) + 1]);
    return std::span<const int>(incident_).subspan(begin, end - begin);
  }
  std::span<const int> incident(const VertexRef& v) const {
    return incident(GlobalId(v));
  }
  // The other endpoint of edge `id`, as a global id.
  int Opposite(int id, int global_id) const {
    const Edge& e = edge(id);
    return global_id == e.left ? n_left_ + e.right : e.left;
  }
  // Initial coverage capacity: total weight of incident edges.
  Weight capacity(const VertexRef& v) const;

  // Same topology and weights with a new budget (validated).
  BipartiteInstance WithBudget(int k) const;

  friend bool operator==(const BipartiteInstance& a, const BipartiteInstance& b) {
    return a.n_left_ == b.n_left_ && a.n_right_ == b.n_right_ && a.k_ == b.k_ &&
           a.edges_ == b.edges_;
  }

 private:
  int n_left_ = 0;
  int n_right_ = 0;
  int k_ = 0;
  std::vector<Edge> edges_;
  std::vector<int> offsets_ = {0};
  std::vector<int> incident_;
  Weight total_weight_ = 0;
};

// Bitset over edge ids.
class EdgeSet {
 public:
  EdgeSet() = default;
  explicit EdgeSet(int num_edges)
      : size_(num_edges), words_((static_cast<size_t>(num_edges) + 63) / 64, 0) {}

  int size() const { return size_; }
  bool test(int id) const {
    return (words_[static_cast<size_t>(id) >> 6] >> (id & 63)) & 1U;
  }
  void set(int id) { words_[static_cast<size_t>(id) >> 6] |= std::uint64_t{1} << (id & 63); }
  void reset(int id) {
    words_[static_cast<size_t>(id) >> 6] &= ~(std::uint64_t{1} << (id & 63));
  }
  int count() const;

  friend bool operator==(const EdgeSet&, const EdgeSet&) = default;

 private:
  int size_ = 0;
  std::vector<std::uint64_t> words_;
};

// A set of vertices answering an instance, with its exact covered weight.
struct CoverSolution {
  std::vector<VertexRef> vertices;  // sorted, distinct
  Weight covered_weight = 0;

  friend bool operator==(const CoverSolution&, const CoverSolution&) = default;
};

// True when `a` should be preferred over `b`: larger weight, then the
// lexicographically smaller vertex set.
bool BetterSolution(const CoverSolution& a, const CoverSolution& b);

// Total weight of edges with at least one endpoint in `vertices`; repeated
// vertices are counted once. Throws InstanceError("vertex out of range").
Weight CoveredWeight(const BipartiteInstance& inst, std::span<const VertexRef> vertices);

// Edges with at least one endpoint in `vertices`.
EdgeSet CoveredEdges(const BipartiteInstance& inst, std::span<const VertexRef> vertices);

// Builds a solution with sorted vertices and recomputed weight.
CoverSolution MakeSolution(const BipartiteInstance& inst, std::vector<VertexRef> vertices);

// Instance left after deleting a vertex set and all edges incident to it.
// Surviving vertices keep their relative order, so index-based tie-breaks
// agree between the residual and the original instance.
struct Residual {
  BipartiteInstance instance;
  std::vector<int> left_origin;   // residual left index -> original index
  std::vector<int> right_origin;  // residual right index -> original index
  std::vector<int> edge_origin;   // residual edge id -> original edge id

  VertexRef Lift(const VertexRef& v) const;
  std::vector<VertexRef> Lift(std::span<const VertexRef> vertices) const;
};

// Throws InstanceError when `removed` holds an invalid vertex or new_k is not
// in [0, remaining vertex count).
Residual MakeResidual(const BipartiteInstance& inst, std::span<const VertexRef> removed,
                      int new_k);

// The l vertices of `side` covering the most weight outside `already_covered`.
// Same-side vertices have disjoint edge sets, so sorting by residual capacity
// is exact. Ties go to the smaller index; l is clamped to the side size.
std::vector<VertexRef> TopLOneSide(const BipartiteInstance& inst, Side side, int l,
                                   const EdgeSet& already_covered);
std::vector<VertexRef> TopLOneSide(const BipartiteInstance& inst, Side side, int l);

// Vertices of `side` by non-increasing initial capacity, ties by index.
std::vector<VertexRef> SortedByCapacity(const BipartiteInstance& inst, Side side);

}  // namespace mkvc

#endif  // MKVC_INSTANCE_H_
