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

#include "mkvc/reduction.h"

#include <limits>

namespace mkvc {

bool RationalInstance::IsIntegral() const {
  for (const RationalEdge& e : edges) {
    if (boost::multiprecision::denominator(e.weight) != 1) return false;
  }
  return true;
}

RationalInstance ToRational(const BipartiteInstance& inst) {
  RationalInstance out{inst.n_left(), inst.n_right(), {}, inst.k()};
  out.edges.reserve(inst.edges().size());
  for (const Edge& e : inst.edges()) {
    out.edges.push_back(RationalEdge{e.left, e.right, Ratio(BigInt(e.weight))});
  }
  return out;
}

namespace {

Weight ToWeight(const BigInt& value) {
  if (value < 0 || value > std::numeric_limits<Weight>::max()) {
    throw InstanceError("weight does not fit 64-bit arithmetic");
  }
  return value.convert_to<Weight>();
}

}  // namespace

BipartiteInstance ClearDenominators(const RationalInstance& inst) {
  BigInt lcm = 1;
  for (const RationalEdge& e : inst.edges) {
    if (e.weight < 0) throw InstanceError("negative edge weight");
    lcm = boost::multiprecision::lcm(lcm, boost::multiprecision::denominator(e.weight));
  }
  std::vector<Edge> edges;
  edges.reserve(inst.edges.size());
  for (const RationalEdge& e : inst.edges) {
    const Ratio scaled = e.weight * lcm;
    edges.push_back(Edge{e.left, e.right, ToWeight(boost::multiprecision::numerator(scaled))});
  }
  return BipartiteInstance(inst.n_left, inst.n_right, std::move(edges), inst.k);
}

Ratio CoveredWeight(const RationalInstance& inst, std::span<const VertexRef> vertices) {
  std::vector<char> left(inst.n_left, 0);
  std::vector<char> right(inst.n_right, 0);
  for (const VertexRef& v : vertices) {
    const int size = v.side == Side::kLeft ? inst.n_left : inst.n_right;
    if (v.index < 0 || v.index >= size) throw InstanceError("vertex out of range: " + ToString(v));
    (v.side == Side::kLeft ? left : right)[v.index] = 1;
  }
  Ratio total = 0;
  for (const RationalEdge& e : inst.edges) {
    if (left[e.left] || right[e.right]) total += e.weight;
  }
  return total;
}

ScaledInstance ScaleWeights(const RationalInstance& inst, int ell) {
  if (ell < 3) throw InstanceError("scaling exponent ell must be at least 3");
  Ratio w_max = 0;
  for (const RationalEdge& e : inst.edges) {
    if (e.weight < 0) throw InstanceError("negative edge weight");
    if (e.weight > w_max) w_max = e.weight;
  }
  if (w_max == 0) throw InstanceError("degenerate instance");
  const int n = inst.order();
  const BigInt bound = boost::multiprecision::pow(BigInt(n), static_cast<unsigned>(ell));
  std::vector<Edge> edges;
  edges.reserve(inst.edges.size());
  for (const RationalEdge& e : inst.edges) {
    edges.push_back(Edge{e.left, e.right, ToWeight(Ceil(Ratio(bound * e.weight / w_max)))});
  }
  ScaledInstance out{BipartiteInstance(inst.n_left, inst.n_right, std::move(edges), inst.k), {}};
  out.receipt.ell = ell;
  out.receipt.w_max = w_max;
  out.receipt.n = n;
  out.receipt.bound = ToWeight(bound);
  out.receipt.scale_note = "w -> ceil(" + std::to_string(n) + "^" + std::to_string(ell) +
                           " * w / " + ToFractionString(w_max) + ")";
  return out;
}

ScaledInstance ScaleWeights(const BipartiteInstance& inst, int ell) {
  return ScaleWeights(ToRational(inst), ell);
}

Ratio RatioTransfer(const Ratio& rho, int n, int ell) {
  if (n < 2 || ell < 3) throw std::invalid_argument("ratio transfer needs n >= 2 and ell >= 3");
  const BigInt denom = 4 * boost::multiprecision::pow(BigInt(n), static_cast<unsigned>(ell - 2));
  return Ratio(rho - Ratio(BigInt(1), denom));
}

}  // namespace mkvc
