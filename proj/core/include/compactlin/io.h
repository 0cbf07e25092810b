// Copyright 2026 The compactlin Authors.
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

#ifndef COMPACTLIN_IO_H_
#define COMPACTLIN_IO_H_

#include <string>
#include <string_view>
#include <vector>

#include "compactlin/error.h"
#include "compactlin/lin_model.h"
#include "compactlin/model.h"

namespace compactlin {

struct Diagnostic {
  int line = 0;  // 0 when not tied to a line
  std::string code;
  std::string message;
};

class ParseError : public Error {
 public:
  ParseError(ErrorCode code, std::vector<Diagnostic> diagnostics);

  const std::vector<Diagnostic>& diagnostics() const { return diagnostics_; }

 private:
  std::vector<Diagnostic> diagnostics_;
};

// Reads the instance text format (see docs/instance-format.md). Throws
// ParseError with kSyntaxError or kValidationError.
Instance ParseInstance(std::string_view text);

// Canonical text form; ParseInstance(SerializeInstance(x)) == x.
std::string SerializeInstance(const Instance& inst);

// CPLEX LP format. Rows whose coefficients are not exact decimals are
// scaled to integers, with a comment naming the factor.
std::string ExportLp(const LinModel& model);

}  // namespace compactlin

#endif  // COMPACTLIN_IO_H_
