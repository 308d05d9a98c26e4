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

#include "mkvc_cli/cli.h"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "mkvc/generate.h"
#include "mkvc/instance_io.h"
#include "mkvc/reduction.h"
#include "mkvc/run_matrix.h"
#include "mkvc/solvers.h"
#include "mkvc/verify.h"

namespace mkvc::cli {
namespace {

namespace fs = std::filesystem;

struct SolverFlags {
  std::string algorithm = "greedy";
  std::string base = "greedy";
  int c = 3;
  int x_size = 0;
  std::string side = "L";
  bool split = false;
  std::string epsilon = "1/10";
  int max_depth = 2;
  std::uint64_t oracle_budget = kDefaultOracleBudget;
};

void AddSolverFlags(CLI::App& cmd, SolverFlags& f) {
  cmd.add_option("--c", f.c, "Alg2 enumeration constant (c > 2)")->capture_default_str();
  cmd.add_option("--x-size", f.x_size, "Alg1 prefix size")->capture_default_str();
  cmd.add_option("--side", f.side, "Side for topside and alg1")
      ->check(CLI::IsMember({"L", "R"}))
      ->capture_default_str();
  cmd.add_flag("--split", f.split, "Try every split of k between the sides (topside, alg1)");
  cmd.add_option("--epsilon", f.epsilon, "PTAS target 1 - epsilon (p/q or decimal)")
      ->capture_default_str();
  cmd.add_option("--max-depth", f.max_depth, "PTAS composition depth cap")->capture_default_str();
  cmd.add_option("--base", f.base, "Base solver for alg1, alg2 and ptas")
      ->check(CLI::IsMember({"greedy", "exact", "alg2"}))
      ->capture_default_str();
  cmd.add_option("--oracle-budget", f.oracle_budget, "Maximum subsets the exact oracle may enumerate")
      ->capture_default_str();
}

SolverSpec BaseSpec(const SolverFlags& f) {
  if (f.base == "exact") return SolverSpec::Exact(f.oracle_budget);
  if (f.base == "alg2") return SolverSpec::Alg2(f.c, SolverSpec::Greedy());
  return SolverSpec::Greedy();
}

// Throws std::invalid_argument for unknown names or malformed parameters.
SolverSpec MakeSolver(const std::string& name, const SolverFlags& f) {
  const Side side = f.side == "R" ? Side::kRight : Side::kLeft;
  if (name == "greedy") return SolverSpec::Greedy();
  if (name == "exact") return SolverSpec::Exact(f.oracle_budget);
  if (name == "semiregular") return SolverSpec::SemiRegular();
  if (name == "topside") return f.split ? SolverSpec::TopSideSplit() : SolverSpec::TopSide(side);
  if (name == "alg1") {
    return f.split ? SolverSpec::Alg1Split(BaseSpec(f)) : SolverSpec::Alg1(f.x_size, BaseSpec(f), side);
  }
  if (name == "alg2") return SolverSpec::Alg2(f.c, BaseSpec(f));
  if (name == "ptas") return SolverSpec::Ptas(ParseRatio(f.epsilon), BaseSpec(f), f.max_depth, f.c);
  throw std::invalid_argument("unknown algorithm '" + name + "'");
}

void PrintVertices(const std::vector<VertexRef>& vertices, std::ostream& out) {
  out << "vertices";
  for (const VertexRef& v : vertices) out << ' ' << ToString(v);
  out << '\n';
}

int RunGen(const GenSpec& spec, const std::string& output, std::ostream& out) {
  const RationalInstance inst = Generate(spec);
  if (output.empty() || output == "-") {
    WriteInstance(inst, out);
  } else {
    WriteInstance(inst, fs::path(output));
  }
  return kExitOk;
}

int RunSolve(const std::string& path, const SolverFlags& f, std::optional<int> scale_ell,
             std::ostream& out, std::ostream& err) {
  const RationalInstance raw = ReadRationalInstance(path);
  SolverSpec spec = MakeSolver(f.algorithm, f);
  Validate(spec);

  std::optional<ScaledInstance> scaled;
  if (scale_ell) {
    scaled = ScaleWeights(raw, *scale_ell);
  } else if (!raw.IsIntegral()) {
    throw InstanceError("instance has non-integral weights; rerun with --scale-ell 3");
  }
  const BipartiteInstance inst = scaled ? scaled->instance : ToIntegerInstance(raw);

  CoverSolution solution;
  std::optional<PtasRun> ptas;
  if (spec.kind == SolverKind::kPtas) {
    ptas = SolvePtas(inst, spec.epsilon, RatedSolver::Of(*spec.base), spec.max_depth);
    solution = ptas->solution;
  } else {
    solution = Solve(spec, inst);
  }

  out << "solver " << spec.Label() << '\n';
  if (scaled) {
    out << "scaled_value " << solution.covered_weight << '\n';
    out << "value " << ToFractionString(CoveredWeight(raw, solution.vertices)) << '\n';
    out << "scale n^" << scaled->receipt.ell << '=' << scaled->receipt.bound << " w_max "
        << ToFractionString(scaled->receipt.w_max) << '\n';
  } else {
    out << "value " << solution.covered_weight << '\n';
  }
  PrintVertices(solution.vertices, out);
  if (ptas) {
    out << "ptas_iterations " << ptas->schedule_iterations << '\n';
    out << "ptas_depth " << ptas->executed_depth << '\n';
    out << "guarantee " << ToDecimal(ptas->guarantee) << '\n';
    if (!ptas->reaches_target()) {
      err << "warning: depth " << ptas->executed_depth << " guarantees "
          << ToDecimal(ptas->guarantee) << ", below the target " << ToDecimal(ptas->target)
          << "; the full schedule needs " << ptas->schedule_iterations << " levels\n";
    }
  }
  return kExitOk;
}

std::vector<fs::path> InstanceFiles(const fs::path& input) {
  if (!fs::is_directory(input)) return {input};
  std::vector<fs::path> files;
  for (const fs::directory_entry& entry : fs::directory_iterator(input)) {
    if (entry.is_regular_file() && entry.path().extension() == ".mkvc") {
      files.push_back(entry.path());
    }
  }
  std::sort(files.begin(), files.end());
  return files;
}

std::vector<std::string> SplitList(const std::string& list) {
  std::vector<std::string> items;
  std::stringstream stream(list);
  for (std::string item; std::getline(stream, item, ',');) {
    if (!item.empty()) items.push_back(item);
  }
  return items;
}

int RunBench(const std::string& input, const std::string& solvers, const SolverFlags& f,
             bool oracle, bool timing, const std::string& output, std::ostream& out,
             std::ostream& err) {
  std::vector<SolverSpec> specs;
  for (const std::string& name : SplitList(solvers)) {
    specs.push_back(MakeSolver(name, f));
    Validate(specs.back());
  }
  std::vector<NamedInstance> instances;
  for (const fs::path& file : InstanceFiles(input)) {
    instances.push_back({file.stem().string(), ReadInstance(file)});
  }
  MatrixOptions options;
  options.oracle = oracle;
  options.oracle_budget = f.oracle_budget;
  const std::vector<RunRecord> records = RunMatrix(instances, specs, options);

  if (output.empty() || output == "-") {
    WriteCsv(records, out, timing);
  } else {
    std::ofstream file(output);
    if (!file) throw std::runtime_error("cannot write " + output);
    WriteCsv(records, file, timing);
  }
  int failures = 0;
  for (const RunRecord& r : records) {
    if (r.error.empty()) continue;
    ++failures;
    err << "error: " << r.instance_id << " / " << r.solver << ": " << r.error << '\n';
  }
  return failures == 0 ? kExitOk : kExitSolverError;
}

int RunVerify(const VerifyOptions& options, std::ostream& out) {
  const VerifyReport report = RunVerification(options);
  PrintReport(report, out);
  return report.all_passed() ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int CliMain(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Edge-weighted max k-vertex cover on bipartite graphs", "mkvc"};
  app.require_subcommand(1);

  GenSpec gen;
  std::string gen_kind = "uniform";
  std::optional<int> gen_k;
  std::string gen_output;
  CLI::App* gen_cmd = app.add_subcommand("gen", "Generate an instance file");
  gen_cmd->add_option("--kind", gen_kind, "uniform, semiregular, adversarial or complete")
      ->check(CLI::IsMember({"uniform", "semiregular", "adversarial", "complete"}))
      ->capture_default_str();
  gen_cmd->add_option("--n-left", gen.n_left)->capture_default_str();
  gen_cmd->add_option("--n-right", gen.n_right)->capture_default_str();
  gen_cmd->add_option("--p", gen.edge_prob, "Edge probability (uniform)")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  gen_cmd->add_option("--d-left", gen.degree_left, "Left degree (semiregular)");
  gen_cmd->add_option("--d-right", gen.degree_right, "Right degree (semiregular)");
  gen_cmd->add_option("--w-min", gen.w_min)->capture_default_str();
  gen_cmd->add_option("--w-max", gen.w_max)->capture_default_str();
  gen_cmd->add_option("--seed", gen.seed)->capture_default_str();
  gen_cmd->add_option("--k", gen_k, "Budget (default ceil(n/4))");
  gen_cmd->add_flag("--rational", gen.rational, "Emit non-integral weights");
  gen_cmd->add_option("-o,--output", gen_output, "Output file (default stdout)");

  SolverFlags solve_flags;
  std::string solve_path;
  std::optional<int> scale_ell;
  CLI::App* solve_cmd = app.add_subcommand("solve", "Solve one instance file");
  solve_cmd->add_option("instance", solve_path, "Instance file")->required();
  solve_cmd
      ->add_option("--algorithm", solve_flags.algorithm,
                   "greedy, topside, alg1, alg2, ptas, exact or semiregular")
      ->check(CLI::IsMember({"greedy", "topside", "alg1", "alg2", "ptas", "exact", "semiregular"}))
      ->capture_default_str();
  AddSolverFlags(*solve_cmd, solve_flags);
  solve_cmd->add_option("--scale-ell", scale_ell, "Rescale weights to integers up to n^ell first");

  SolverFlags bench_flags;
  std::string bench_input;
  std::string bench_solvers = "greedy,alg2,ptas";
  std::string bench_output;
  bool bench_oracle = false;
  bool bench_no_timing = false;
  CLI::App* bench_cmd = app.add_subcommand("bench", "Run a solver matrix and emit CSV");
  bench_cmd->add_option("input", bench_input, "Directory of .mkvc files, or one file")
      ->required()
      ->check(CLI::ExistingPath);
  bench_cmd->add_option("--solvers", bench_solvers, "Comma-separated algorithm names")
      ->capture_default_str();
  bench_cmd->add_flag("--oracle", bench_oracle, "Compare every row against the exact optimum");
  bench_cmd->add_flag("--no-timing", bench_no_timing, "Leave time_ms empty");
  bench_cmd->add_option("-o,--output", bench_output, "CSV file (default stdout)");
  AddSolverFlags(*bench_cmd, bench_flags);

  VerifyOptions verify;
  CLI::App* verify_cmd = app.add_subcommand("verify", "Run the invariant suite");
  verify_cmd->add_option("--small-n", verify.small_n, "Exhaustive sweep up to this order")
      ->check(CLI::Range(2, 10))
      ->capture_default_str();
  verify_cmd->add_option("--random-count", verify.random_count)->capture_default_str();
  verify_cmd->add_option("--random-max-n", verify.random_max_n)
      ->check(CLI::Range(2, 16))
      ->capture_default_str();
  verify_cmd->add_option("--reduction-count", verify.reduction_count)->capture_default_str();
  verify_cmd->add_option("--reduction-max-n", verify.reduction_max_n)
      ->check(CLI::Range(2, 14))
      ->capture_default_str();
  verify_cmd->add_option("--semiregular-count", verify.semiregular_count)->capture_default_str();
  verify_cmd->add_option("--semiregular-max-n", verify.semiregular_max_n)
      ->check(CLI::Range(2, 16))
      ->capture_default_str();
  verify_cmd->add_option("--ptas-depth", verify.ptas_depth)
      ->check(CLI::Range(1, 8))
      ->capture_default_str();
  verify_cmd->add_option("--seed", verify.seed)->capture_default_str();
  verify_cmd->add_option("--oracle-budget", verify.oracle_budget)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n";
    const CLI::App* scope = &app;
    for (const CLI::App* sub : {gen_cmd, solve_cmd, bench_cmd, verify_cmd}) {
      if (sub->parsed()) scope = sub;
    }
    err << scope->help();
    return kExitUsage;
  }

  try {
    if (gen_cmd->parsed()) {
      gen.kind = ParseGenKind(gen_kind);
      gen.k = gen_k;
      return RunGen(gen, gen_output, out);
    }
    if (solve_cmd->parsed()) return RunSolve(solve_path, solve_flags, scale_ell, out, err);
    if (bench_cmd->parsed()) {
      return RunBench(bench_input, bench_solvers, bench_flags, bench_oracle, !bench_no_timing,
                      bench_output, out, err);
    }
    return RunVerify(verify, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitSolverError;
  }
}

}  // namespace mkvc::cli
