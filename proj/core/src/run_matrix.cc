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

#include "mkvc/run_matrix.h"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <map>
#include <ostream>

namespace mkvc {

std::vector<RunRecord> RunMatrix(const std::vector<NamedInstance>& instances,
                                 const std::vector<SolverSpec>& solvers,
                                 const MatrixOptions& options) {
  std::vector<RunRecord> records;
  for (const NamedInstance& named : instances) {
    std::optional<Weight> opt;
    std::string oracle_error;
    if (options.oracle) {
      try {
        opt = SolveExact(named.instance, options.oracle_budget).covered_weight;
      } catch (const std::exception& e) {
        oracle_error = std::string("oracle: ") + e.what();
      }
    }
    for (const SolverSpec& spec : solvers) {
      RunRecord record;
      record.instance_id = named.id;
      record.solver = spec.Label();
      record.opt = opt;
      record.error = oracle_error;
      const auto start = std::chrono::steady_clock::now();
      try {
        record.value = Solve(spec, named.instance).covered_weight;
      } catch (const std::exception& e) {
        record.error = record.error.empty() ? e.what() : record.error + "; " + e.what();
      }
      record.time_ms = std::chrono::duration<double, std::milli>(
                           std::chrono::steady_clock::now() - start)
                           .count();
      if (record.value && record.opt) {
        record.ratio = *record.opt == 0 ? Ratio(1)
                                        : Ratio(BigInt(*record.value), BigInt(*record.opt));
      } else {
        record.opt.reset();
      }
      records.push_back(std::move(record));
    }
  }
  std::stable_sort(records.begin(), records.end(), [](const RunRecord& a, const RunRecord& b) {
    return std::tie(a.instance_id, a.solver) < std::tie(b.instance_id, b.solver);
  });
  return records;
}

std::string CsvField(const std::string& field) {
  if (field.find_first_of(",\"\n\r") == std::string::npos) return field;
  std::string quoted = "\"";
  for (char ch : field) {
    if (ch == '"') quoted += '"';
    quoted += ch;
  }
  return quoted + "\"";
}

namespace {

std::string FormatMs(double ms) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3f", ms);
  return buf;
}

}  // namespace

void WriteCsv(const std::vector<RunRecord>& records, std::ostream& out, bool include_timing) {
  out << "instance_id,solver,value,opt,ratio,time_ms,error\n";
  struct Summary {
    std::optional<Ratio> min;
    Ratio sum = 0;
    int count = 0;
    double time_ms = 0;
  };
  std::map<std::string, Summary> summaries;
  for (const RunRecord& r : records) {
    out << CsvField(r.instance_id) << ',' << CsvField(r.solver) << ','
        << (r.value ? std::to_string(*r.value) : "") << ','
        << (r.opt ? std::to_string(*r.opt) : "") << ',' << (r.ratio ? ToDecimal(*r.ratio) : "")
        << ',' << (include_timing ? FormatMs(r.time_ms) : "") << ',' << CsvField(r.error)
        << '\n';
    Summary& s = summaries[r.solver];
    s.time_ms += r.time_ms;
    if (r.ratio) {
      if (!s.min || *r.ratio < *s.min) s.min = *r.ratio;
      s.sum += *r.ratio;
      ++s.count;
    }
  }
  for (const auto& [solver, s] : summaries) {
    const std::string min = s.min ? ToDecimal(*s.min) : "";
    const std::string mean = s.count > 0 ? ToDecimal(Ratio(s.sum / s.count)) : "";
    const std::string time = include_timing ? FormatMs(s.time_ms) : "";
    out << "summary:min," << CsvField(solver) << ",,," << min << ',' << time << ",\n";
    out << "summary:mean," << CsvField(solver) << ",,," << mean << ',' << time << ",\n";
  }
}

}  // namespace mkvc
