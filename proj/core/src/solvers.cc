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

#include "mkvc/solvers.h"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "mkvc/analysis.h"

namespace mkvc {
namespace {

std::shared_ptr<const SolverSpec> Share(SolverSpec spec) {
  return std::make_shared<const SolverSpec>(std::move(spec));
}

const SolverSpec& BaseOf(const SolverSpec& spec) {
  if (spec.base == nullptr) throw SolverError(spec.Label() + " requires a base algorithm");
  return *spec.base;
}

// Keeps the heaviest candidate, ties to the lexicographically smaller set.
class CandidatePool {
 public:
  void Offer(std::vector<int> vertices, Weight value) {
    std::sort(vertices.begin(), vertices.end());
    if (has_best_ && (value < best_value_ || (value == best_value_ && vertices >= best_))) {
      return;
    }
    has_best_ = true;
    best_value_ = value;
    best_ = std::move(vertices);
  }
  bool empty() const { return !has_best_; }
  std::vector<int> Take() { return std::move(best_); }

 private:
  bool has_best_ = false;
  Weight best_value_ = 0;
  std::vector<int> best_;
};

std::vector<int> Concat(std::vector<int> a, const std::vector<int>& b) {
  a.insert(a.end(), b.begin(), b.end());
  std::sort(a.begin(), a.end());
  return a;
}

// Active vertices of one side ranked by residual gain, ties by id.
std::vector<int> TopOnSide(const ResidualView& view, Side side, int l) {
  const BipartiteInstance& inst = view.instance();
  const int begin = side == Side::kLeft ? 0 : inst.n_left();
  const int end = side == Side::kLeft ? inst.n_left() : inst.order();
  std::vector<int> candidates;
  for (int v = begin; v < end; ++v) {
    if (view.active(v)) candidates.push_back(v);
  }
  std::stable_sort(candidates.begin(), candidates.end(),
                   [&](int a, int b) { return view.gain(a) > view.gain(b); });
  candidates.resize(std::min<size_t>(candidates.size(), static_cast<size_t>(std::max(l, 0))));
  std::sort(candidates.begin(), candidates.end());
  return candidates;
}

std::vector<int> RunGreedy(const ResidualView& view) {
  ResidualView work = view;
  const int n = view.instance().order();
  std::vector<int> picked;
  picked.reserve(view.budget());
  for (int round = 0; round < view.budget(); ++round) {
    int best = -1;
    for (int v = 0; v < n; ++v) {
      if (work.active(v) && (best < 0 || work.gain(v) > work.gain(best))) best = v;
    }
    picked.push_back(best);
    work.Take(best);
  }
  std::sort(picked.begin(), picked.end());
  return picked;
}

std::vector<int> RunTopSideSplit(const ResidualView& view) {
  CandidatePool pool;
  const int budget = view.budget();
  for (int k_left = 0; k_left <= budget; ++k_left) {
    const int k_right = budget - k_left;
    if (k_left > view.num_active(Side::kLeft) || k_right > view.num_active(Side::kRight)) {
      continue;
    }
    std::vector<int> chosen =
        Concat(TopOnSide(view, Side::kLeft, k_left), TopOnSide(view, Side::kRight, k_right));
    const Weight value = view.GainOf(chosen);
    pool.Offer(std::move(chosen), value);
  }
  return pool.Take();
}

std::vector<int> RunAlg1(const SolverSpec& base, const ResidualView& view, Side side,
                         int x_size) {
  if (x_size < 0 || x_size > view.budget()) throw SolverError("x_size exceeds the budget k");
  if (x_size > view.num_active(side)) throw SolverError("x_size exceeds the side size");
  const std::vector<int> prefix = TopOnSide(view, side, x_size);
  ResidualView rest = view;
  rest.Take(prefix);
  rest.set_budget(view.budget() - x_size);
  return Concat(prefix, RunOnView(base, rest));
}

std::vector<int> RunAlg1Split(const SolverSpec& base, const ResidualView& view) {
  CandidatePool pool;
  const int budget = view.budget();
  for (int k_left = 0; k_left <= budget; ++k_left) {
    const int k_right = budget - k_left;
    if (k_left <= view.num_active(Side::kLeft)) {
      std::vector<int> s = RunAlg1(base, view, Side::kLeft, k_left);
      const Weight value = view.GainOf(s);
      pool.Offer(std::move(s), value);
    }
    if (k_right <= view.num_active(Side::kRight)) {
      std::vector<int> s = RunAlg1(base, view, Side::kRight, k_right);
      const Weight value = view.GainOf(s);
      pool.Offer(std::move(s), value);
    }
  }
  return pool.Take();
}

// Enumerates all `size`-subsets of the active vertices of `view` with ids >=
// `from`, in lexicographic order, calling base on the residual of each.
void EnumerateSubsets(const SolverSpec& base, ResidualView& view, int from, int size,
                      int final_budget, std::vector<int>& chosen, Weight chosen_gain,
                      CandidatePool& pool) {
  if (size == 0) {
    view.set_budget(final_budget);
    std::vector<int> rest = RunOnView(base, view);
    const Weight value = chosen_gain + view.GainOf(rest);
    pool.Offer(Concat(chosen, rest), value);
    return;
  }
  const int n = view.instance().order();
  for (int v = from; v < n; ++v) {
    if (!view.active(v)) continue;
    ResidualView next = view;
    const Weight gain = next.gain(v);
    next.Take(v);
    chosen.push_back(v);
    EnumerateSubsets(base, next, v + 1, size - 1, final_budget, chosen, chosen_gain + gain,
                     pool);
    chosen.pop_back();
  }
}

std::vector<int> RunAlg2(const SolverSpec& base, const ResidualView& view, int c) {
  const int k = view.budget();
  if (k == 0) return {};
  CandidatePool pool;

  // Plain base run at full budget.
  {
    std::vector<int> s = RunOnView(base, view);
    const Weight value = view.GainOf(s);
    pool.Offer(std::move(s), value);
  }

  // Base at budget k - l, completed by the l best vertices of either side.
  for (int l = k - 1; l >= c; --l) {
    ResidualView partial = view;
    partial.set_budget(k - l);
    const std::vector<int> s = RunOnView(base, partial);
    const Weight base_value = view.GainOf(s);
    ResidualView after = view;
    after.Take(s);
    for (Side side : {Side::kLeft, Side::kRight}) {
      if (after.num_active(side) < l) continue;
      const std::vector<int> top = TopOnSide(after, side, l);
      Weight value = base_value;
      for (int v : top) value += after.gain(v);
      pool.Offer(Concat(s, top), value);
    }
  }

  // Every set C of l <= c vertices, with the base on the rest.
  for (int l = std::min(c, k); l >= 1; --l) {
    ResidualView work = view;
    std::vector<int> chosen;
    EnumerateSubsets(base, work, 0, l, k - l, chosen, 0, pool);
  }
  return pool.Take();
}

std::vector<int> RunExact(const ResidualView& view, std::uint64_t oracle_budget) {
  const int k = view.budget();
  if (BinomialCapped(view.num_active(), k, oracle_budget) > oracle_budget) {
    throw OracleTooLarge();
  }
  const BipartiteInstance& inst = view.instance();
  std::vector<int> vertices;
  for (int v = 0; v < inst.order(); ++v) {
    if (view.active(v)) vertices.push_back(v);
  }
  const int n = static_cast<int>(vertices.size());
  // cover_count[e] > 0 once edge e is covered by the current partial set.
  std::vector<int> cover_count(inst.num_edges(), 0);
  for (int id = 0; id < inst.num_edges(); ++id) {
    if (view.covered().test(id)) cover_count[id] = 1;
  }
  std::vector<int> current;
  std::vector<int> best;
  Weight best_value = 0;
  bool found = false;
  auto recurse = [&](auto&& self, int from, Weight value) -> void {
    if (static_cast<int>(current.size()) == k) {
      if (!found || value > best_value) {
        found = true;
        best_value = value;
        best = current;
      }
      return;
    }
    const int still_needed = k - static_cast<int>(current.size());
    for (int i = from; i + still_needed <= n; ++i) {
      const int v = vertices[i];
      Weight added = 0;
      for (int id : inst.incident(v)) {
        if (cover_count[id]++ == 0) added += inst.edge(id).weight;
      }
      current.push_back(v);
      self(self, i + 1, value + added);
      current.pop_back();
      for (int id : inst.incident(v)) --cover_count[id];
    }
  };
  recurse(recurse, 0, 0);
  return best;
}

// Uncovered-edge degrees of active vertices; nullopt unless the active part
// is unweighted and each side is degree-regular.
struct SemiRegularShape {
  int degree_left = 0;
  int degree_right = 0;
};

std::optional<SemiRegularShape> SemiRegularShapeOf(const ResidualView& view) {
  const BipartiteInstance& inst = view.instance();
  std::optional<Weight> weight;
  for (int id = 0; id < inst.num_edges(); ++id) {
    if (view.covered().test(id)) continue;
    if (weight && *weight != inst.edge(id).weight) return std::nullopt;
    weight = inst.edge(id).weight;
  }
  int degree[2] = {-1, -1};
  for (int v = 0; v < inst.order(); ++v) {
    if (!view.active(v)) continue;
    int d = 0;
    for (int id : inst.incident(v)) d += view.covered().test(id) ? 0 : 1;
    int& side_degree = degree[v < inst.n_left() ? 0 : 1];
    if (side_degree >= 0 && side_degree != d) return std::nullopt;
    side_degree = d;
  }
  return SemiRegularShape{std::max(degree[0], 0), std::max(degree[1], 0)};
}

std::vector<int> RunSemiRegular(const ResidualView& view) {
  const auto shape = SemiRegularShapeOf(view);
  if (!shape) throw SolverError("not semi-regular/unweighted");
  const Side side =
      shape->degree_right > shape->degree_left ? Side::kRight : Side::kLeft;
  const int take = std::min(view.budget(), view.num_active(side));
  // Same-side vertices have disjoint edges: any `take` of them cover
  // take * degree; when the side runs out, it already covers every edge.
  std::vector<int> chosen = TopOnSide(view, side, take);
  if (take == view.budget()) return chosen;
  ResidualView rest = view;
  rest.Take(chosen);
  rest.set_budget(view.budget() - take);
  return Concat(chosen, RunGreedy(rest));
}

std::vector<VertexRef> ToRefs(const BipartiteInstance& inst, const std::vector<int>& ids) {
  std::vector<VertexRef> refs;
  refs.reserve(ids.size());
  for (int v : ids) refs.push_back(inst.VertexAt(v));
  return refs;
}

SolverSpec PtasChain(const SolverSpec& spec, int depth) {
  SolverSpec level = BaseOf(spec);
  for (int i = 0; i < depth; ++i) level = SolverSpec::Alg2(spec.c, std::move(level));
  return level;
}

int PtasDepth(const SolverSpec& spec, int* schedule_iterations) {
  const std::optional<Ratio> rho = Guarantee(BaseOf(spec));
  if (!rho) throw SolverError("ptas base carries no approximation guarantee");
  if (spec.epsilon <= 0 || spec.epsilon > Ratio(1, 2)) {
    throw SolverError("epsilon out of admissible range");
  }
  // A base that already meets 1 - epsilon needs no improvement passes.
  const int t = *rho >= 1 - spec.epsilon ? 0 : PtasIterationBound(*rho, spec.epsilon);
  if (schedule_iterations != nullptr) *schedule_iterations = t;
  return std::min(t, spec.max_depth);
}

}  // namespace

SolverSpec SolverSpec::Greedy() { return SolverSpec{}; }

SolverSpec SolverSpec::Exact(std::uint64_t oracle_budget) {
  SolverSpec spec;
  spec.kind = SolverKind::kExact;
  spec.oracle_budget = oracle_budget;
  return spec;
}

SolverSpec SolverSpec::SemiRegular() {
  SolverSpec spec;
  spec.kind = SolverKind::kSemiRegular;
  return spec;
}

SolverSpec SolverSpec::TopSide(Side side) {
  SolverSpec spec;
  spec.kind = SolverKind::kTopSide;
  spec.side = side;
  return spec;
}

SolverSpec SolverSpec::TopSideSplit() {
  SolverSpec spec;
  spec.kind = SolverKind::kTopSide;
  spec.guess_split = true;
  return spec;
}

SolverSpec SolverSpec::Alg1(int x_size, SolverSpec base, Side side) {
  SolverSpec spec;
  spec.kind = SolverKind::kAlg1;
  spec.x_size = x_size;
  spec.side = side;
  spec.base = Share(std::move(base));
  return spec;
}

SolverSpec SolverSpec::Alg1Split(SolverSpec base) {
  SolverSpec spec = Alg1(0, std::move(base));
  spec.guess_split = true;
  return spec;
}

SolverSpec SolverSpec::Alg2(int c, SolverSpec base) {
  SolverSpec spec;
  spec.kind = SolverKind::kAlg2;
  spec.c = c;
  spec.base = Share(std::move(base));
  return spec;
}

SolverSpec SolverSpec::Ptas(Ratio epsilon, SolverSpec base, int max_depth, int c) {
  SolverSpec spec;
  spec.kind = SolverKind::kPtas;
  spec.epsilon = std::move(epsilon);
  spec.max_depth = max_depth;
  spec.c = c;
  spec.base = Share(std::move(base));
  return spec;
}

std::string SolverSpec::Label() const {
  std::ostringstream out;
  switch (kind) {
    case SolverKind::kGreedy:
      return "greedy";
    case SolverKind::kExact:
      return "exact";
    case SolverKind::kSemiRegular:
      return "semiregular";
    case SolverKind::kTopSide:
      return guess_split ? "topside(split)" : std::string("topside(") + SideName(side) + ")";
    case SolverKind::kAlg1:
      out << "alg1(";
      if (guess_split) {
        out << "split";
      } else {
        out << "x=" << x_size << ";" << SideName(side);
      }
      out << ";" << (base ? base->Label() : "?") << ")";
      return out.str();
    case SolverKind::kAlg2:
      out << "alg2(c=" << c << ";" << (base ? base->Label() : "?") << ")";
      return out.str();
    case SolverKind::kPtas:
      out << "ptas(eps=" << ToFractionString(epsilon) << ";depth<=" << max_depth << ";c=" << c
          << ";" << (base ? base->Label() : "?") << ")";
      return out.str();
  }
  return "unknown";
}

void Validate(const SolverSpec& spec) {
  switch (spec.kind) {
    case SolverKind::kGreedy:
    case SolverKind::kExact:
    case SolverKind::kSemiRegular:
    case SolverKind::kTopSide:
      return;
    case SolverKind::kAlg1:
      if (spec.x_size < 0) throw SolverError("x_size must be non-negative");
      Validate(BaseOf(spec));
      return;
    case SolverKind::kAlg2:
      if (spec.c <= 2) throw SolverError("enumeration constant c must exceed 2");
      Validate(BaseOf(spec));
      return;
    case SolverKind::kPtas:
      if (spec.c <= 2) throw SolverError("enumeration constant c must exceed 2");
      if (spec.max_depth < 1) throw SolverError("max_depth must be at least 1");
      Validate(BaseOf(spec));
      PtasDepth(spec, nullptr);
      return;
  }
}

std::optional<Ratio> Guarantee(const SolverSpec& spec) {
  switch (spec.kind) {
    case SolverKind::kGreedy:
      return GreedyRatioLowerBound();
    case SolverKind::kExact:
    case SolverKind::kSemiRegular:
      return Ratio(1);
    case SolverKind::kTopSide:
    case SolverKind::kAlg1:
      return std::nullopt;
    case SolverKind::kAlg2: {
      const auto rho = Guarantee(BaseOf(spec));
      if (!rho) return std::nullopt;
      return ComposedGuarantee(*rho, 1);
    }
    case SolverKind::kPtas: {
      const auto rho = Guarantee(BaseOf(spec));
      if (!rho) return std::nullopt;
      return ComposedGuarantee(*rho, PtasDepth(spec, nullptr));
    }
  }
  return std::nullopt;
}

RatedSolver RatedSolver::Of(SolverSpec spec) {
  const std::optional<Ratio> rho = Guarantee(spec);
  if (!rho) throw SolverError(spec.Label() + " carries no approximation guarantee");
  return RatedSolver{std::move(spec), *rho};
}

std::vector<int> RunOnView(const SolverSpec& spec, const ResidualView& view) {
  switch (spec.kind) {
    case SolverKind::kGreedy:
      return RunGreedy(view);
    case SolverKind::kExact:
      return RunExact(view, spec.oracle_budget);
    case SolverKind::kSemiRegular:
      return RunSemiRegular(view);
    case SolverKind::kTopSide:
      if (spec.guess_split) return RunTopSideSplit(view);
      return TopOnSide(view, spec.side, view.budget());
    case SolverKind::kAlg1:
      if (spec.guess_split) return RunAlg1Split(BaseOf(spec), view);
      return RunAlg1(BaseOf(spec), view, spec.side, spec.x_size);
    case SolverKind::kAlg2:
      return RunAlg2(BaseOf(spec), view, spec.c);
    case SolverKind::kPtas:
      return RunOnView(PtasChain(spec, PtasDepth(spec, nullptr)), view);
  }
  throw SolverError("unknown solver kind");
}

CoverSolution Solve(const SolverSpec& spec, const BipartiteInstance& inst) {
  Validate(spec);
  const ResidualView view(inst);
  return MakeSolution(inst, ToRefs(inst, RunOnView(spec, view)));
}

CoverSolution SolveGreedy(const BipartiteInstance& inst) {
  return Solve(SolverSpec::Greedy(), inst);
}

CoverSolution SolveTopSide(const BipartiteInstance& inst, Side side) {
  return Solve(SolverSpec::TopSide(side), inst);
}

CoverSolution SolveAlg1(const BipartiteInstance& inst, int x_size, const RatedSolver& base,
                        Side side) {
  if (x_size > inst.k()) throw SolverError("x_size exceeds the budget k");
  return Solve(SolverSpec::Alg1(x_size, base.spec, side), inst);
}

CoverSolution SolveAlg2(const BipartiteInstance& inst, int c, const RatedSolver& base) {
  return Solve(SolverSpec::Alg2(c, base.spec), inst);
}

PtasRun SolvePtas(const BipartiteInstance& inst, const Ratio& epsilon, const RatedSolver& base,
                  int max_depth) {
  const SolverSpec spec = SolverSpec::Ptas(epsilon, base.spec, max_depth);
  Validate(spec);
  PtasRun run;
  run.executed_depth = PtasDepth(spec, &run.schedule_iterations);
  run.guarantee = ComposedGuarantee(base.rho, run.executed_depth);
  run.target = 1 - epsilon;
  run.solution = Solve(PtasChain(spec, run.executed_depth), inst);
  return run;
}

CoverSolution SolveExact(const BipartiteInstance& inst, std::uint64_t oracle_budget) {
  return Solve(SolverSpec::Exact(oracle_budget), inst);
}

bool IsSemiRegularUnweighted(const BipartiteInstance& inst) {
  return SemiRegularShapeOf(ResidualView(inst)).has_value();
}

CoverSolution SolveSemiRegularExact(const BipartiteInstance& inst) {
  return Solve(SolverSpec::SemiRegular(), inst);
}

CoverSolution GuessSplitRunner(const BipartiteInstance& inst, const SplitProcedure& inner) {
  std::optional<CoverSolution> best;
  for (int k_left = 0; k_left <= inst.k(); ++k_left) {
    std::optional<CoverSolution> candidate = inner(k_left, inst.k() - k_left);
    if (candidate && (!best || BetterSolution(*candidate, *best))) best = std::move(candidate);
  }
  if (!best) throw SolverError("no feasible budget split");
  return *best;
}

std::uint64_t BinomialCapped(int n, int r, std::uint64_t cap) {
  if (r < 0 || r > n) return 0;
  r = std::min(r, n - r);
  // C(n, i) = C(n, i - 1) * (n - i + 1) / i stays integral at every step.
  unsigned __int128 value = 1;
  for (int i = 1; i <= r; ++i) {
    value = value * static_cast<unsigned>(n - i + 1) / static_cast<unsigned>(i);
    if (value > cap) return cap + 1;
  }
  return static_cast<std::uint64_t>(value);
}

}  // namespace mkvc
