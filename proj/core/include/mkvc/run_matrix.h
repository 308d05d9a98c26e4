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

// Runs solver x instance matrices and emits CSV reports.

#ifndef MKVC_RUN_MATRIX_H_
#define MKVC_RUN_MATRIX_H_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "mkvc/instance.h"
#include "mkvc/ratio.h"
#include "mkvc/solvers.h"

namespace mkvc {

struct NamedInstance {
  std::string id;
  BipartiteInstance instance;
};

struct RunRecord {
  std::string instance_id;
  std::string solver;
  std::optional<Weight> value;
  std::optional<Weight> opt;
  std::optional<Ratio> ratio;  // value / opt, present iff opt is
  double time_ms = 0;
  std::string error;
};

struct MatrixOptions {
  bool oracle = false;
  std::uint64_t oracle_budget = kDefaultOracleBudget;
};

// Runs every (instance, solver) pair. Failures are recorded per row and do
// not stop the run. Records come back sorted by (instance_id, solver).
std::vector<RunRecord> RunMatrix(const std::vector<NamedInstance>& instances,
                                 const std::vector<SolverSpec>& solvers,
                                 const MatrixOptions& options);

// Header "instance_id,solver,value,opt,ratio,time_ms,error", one row per
// record, then per solver a "summary:min" and a "summary:mean" row carrying
// the ratio statistics. With include_timing == false the time_ms column is
// left empty.
void WriteCsv(const std::vector<RunRecord>& records, std::ostream& out,
              bool include_timing = true);

// RFC 4180 quoting when needed.
std::string CsvField(const std::string& field);

}  // namespace mkvc

#endif  // MKVC_RUN_MATRIX_H_
