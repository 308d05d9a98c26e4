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

// Line-oriented instance files:
//
//   p mkvc <n_left> <n_right> <m> <k>
//   e <left_index> <right_index> <weight>      (m lines, 0-based indices)
//   c <anything>                               (comment, ignored)
//
// Weights are non-negative integers. Rational weights ("7/3" or "2.25") are
// also accepted and yield a non-integral RationalInstance that must be scaled
// before solving.

#ifndef MKVC_INSTANCE_IO_H_
#define MKVC_INSTANCE_IO_H_

#include <filesystem>
#include <iosfwd>
#include <string>

#include "mkvc/instance.h"
#include "mkvc/reduction.h"

namespace mkvc {

class ParseError : public InstanceError {
 public:
  ParseError(int line, const std::string& message, const std::string& source = "")
      : InstanceError((source.empty() ? "" : source + ": ") + "line " + std::to_string(line) +
                      ": " + message),
        line_(line),
        message_(message) {}
  int line() const { return line_; }
  const std::string& message() const { return message_; }

 private:
  int line_;
  std::string message_;
};

RationalInstance ParseInstance(std::istream& in);
RationalInstance ReadRationalInstance(const std::filesystem::path& path);

// Throws InstanceError when the file carries non-integral weights.
BipartiteInstance ToIntegerInstance(const RationalInstance& inst);
BipartiteInstance ReadInstance(const std::filesystem::path& path);

void WriteInstance(const RationalInstance& inst, std::ostream& out);
void WriteInstance(const BipartiteInstance& inst, std::ostream& out);
void WriteInstance(const BipartiteInstance& inst, const std::filesystem::path& path);
void WriteInstance(const RationalInstance& inst, const std::filesystem::path& path);

}  // namespace mkvc

#endif  // MKVC_INSTANCE_IO_H_
