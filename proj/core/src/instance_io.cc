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

#include "mkvc/instance_io.h"

#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <utility>
#include <vector>

namespace mkvc {
namespace {

std::vector<std::string> Tokens(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  for (std::string tok; in >> tok;) out.push_back(tok);
  return out;
}

int ParseIndex(const std::string& tok, int line, const char* what) {
  std::size_t used = 0;
  long value = 0;
  try {
    value = std::stol(tok, &used);
  } catch (const std::exception&) {
    throw ParseError(line, std::string("malformed ") + what + " '" + tok + "'");
  }
  if (used != tok.size() || value < 0 || value > (1L << 30)) {
    throw ParseError(line, std::string("malformed ") + what + " '" + tok + "'");
  }
  return static_cast<int>(value);
}

}  // namespace

RationalInstance ParseInstance(std::istream& in) {
  RationalInstance inst;
  bool have_header = false;
  int declared_edges = 0;
  int line_no = 0;
  std::set<std::pair<int, int>> seen;
  for (std::string line; std::getline(in, line);) {
    ++line_no;
    const std::vector<std::string> tok = Tokens(line);
    if (tok.empty() || tok[0] == "c") continue;
    if (tok[0] == "p") {
      if (have_header) throw ParseError(line_no, "repeated header");
      if (tok.size() != 6 || tok[1] != "mkvc") {
        throw ParseError(line_no, "malformed header, expected 'p mkvc <n_left> <n_right> <m> <k>'");
      }
      inst.n_left = ParseIndex(tok[2], line_no, "n_left");
      inst.n_right = ParseIndex(tok[3], line_no, "n_right");
      declared_edges = ParseIndex(tok[4], line_no, "edge count");
      inst.k = ParseIndex(tok[5], line_no, "k");
      if (inst.n_left < 1 || inst.n_right < 1) {
        throw ParseError(line_no, "both sides must be non-empty");
      }
      if (inst.k < 1 || inst.k >= inst.order()) {
        throw ParseError(line_no, "k must satisfy 1 <= k < n_left + n_right");
      }
      have_header = true;
      continue;
    }
    if (tok[0] == "e") {
      if (!have_header) throw ParseError(line_no, "edge before header");
      if (tok.size() != 4) throw ParseError(line_no, "malformed edge, expected 'e <l> <r> <w>'");
      const int l = ParseIndex(tok[1], line_no, "left index");
      const int r = ParseIndex(tok[2], line_no, "right index");
      if (l >= inst.n_left || r >= inst.n_right) {
        throw ParseError(line_no, "edge (" + tok[1] + "," + tok[2] + ") index out of range");
      }
      if (!seen.emplace(l, r).second) {
        throw ParseError(line_no, "duplicate edge (" + tok[1] + "," + tok[2] + ")");
      }
      Ratio weight;
      try {
        weight = ParseRatio(tok[3]);
      } catch (const std::invalid_argument& e) {
        throw ParseError(line_no, e.what());
      }
      if (weight < 0) throw ParseError(line_no, "negative weight");
      inst.edges.push_back(RationalEdge{l, r, weight});
      continue;
    }
    throw ParseError(line_no, "unknown line type '" + tok[0] + "'");
  }
  if (!have_header) throw ParseError(line_no, "missing header");
  if (static_cast<int>(inst.edges.size()) != declared_edges) {
    throw ParseError(line_no, "header declares " + std::to_string(declared_edges) +
                                  " edges, found " + std::to_string(inst.edges.size()));
  }
  return inst;
}

RationalInstance ReadRationalInstance(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InstanceError("cannot open " + path.string());
  try {
    return ParseInstance(in);
  } catch (const ParseError& e) {
    throw ParseError(e.line(), e.message(), path.string());
  }
}

BipartiteInstance ToIntegerInstance(const RationalInstance& inst) {
  if (!inst.IsIntegral()) {
    throw InstanceError("instance has non-integral weights; scale them first");
  }
  return ClearDenominators(inst);
}

BipartiteInstance ReadInstance(const std::filesystem::path& path) {
  return ToIntegerInstance(ReadRationalInstance(path));
}

void WriteInstance(const RationalInstance& inst, std::ostream& out) {
  out << "p mkvc " << inst.n_left << ' ' << inst.n_right << ' ' << inst.edges.size() << ' '
      << inst.k << '\n';
  for (const RationalEdge& e : inst.edges) {
    out << "e " << e.left << ' ' << e.right << ' ' << ToFractionString(e.weight) << '\n';
  }
}

void WriteInstance(const BipartiteInstance& inst, std::ostream& out) {
  out << "p mkvc " << inst.n_left() << ' ' << inst.n_right() << ' ' << inst.num_edges() << ' '
      << inst.k() << '\n';
  for (const Edge& e : inst.edges()) {
    out << "e " << e.left << ' ' << e.right << ' ' << e.weight << '\n';
  }
}

namespace {

template <typename Inst>
void WriteToPath(const Inst& inst, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw InstanceError("cannot write " + path.string());
  WriteInstance(inst, out);
  if (!out) throw InstanceError("write failed for " + path.string());
}

}  // namespace

void WriteInstance(const BipartiteInstance& inst, const std::filesystem::path& path) {
  WriteToPath(inst, path);
}

void WriteInstance(const RationalInstance& inst, const std::filesystem::path& path) {
  WriteToPath(inst, path);
}

}  // namespace mkvc
