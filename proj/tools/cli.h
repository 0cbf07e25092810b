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

#ifndef COMPACTLIN_TOOLS_CLI_H_
#define COMPACTLIN_TOOLS_CLI_H_

#include <iosfwd>
#include <string>
#include <vector>

namespace compactlin {

// Exit codes: 0 success, 1 verification failure, 2 usage or input error.
int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err);

}  // namespace compactlin

#endif  // COMPACTLIN_TOOLS_CLI_H_
