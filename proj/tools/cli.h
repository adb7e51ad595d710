// Copyright 2026 The wdynmo Authors
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

// The wdynmo command-line interface, callable in-process for testing.
//
// Exit codes: 0 success, 1 usage error, 2 input error, 3 unmet precondition
// or unsupported operation, 4 resource limit.

#ifndef WDYNMO_TOOLS_CLI_H_
#define WDYNMO_TOOLS_CLI_H_

#include <iosfwd>
#include <string>
#include <vector>

namespace wdynmo::cli {

enum ExitCode {
  kOk = 0,
  kUsage = 1,
  kInput = 2,
  kPrecondition = 3,
  kResource = 4,
};

// `args` excludes the program name. A file argument of "-" reads `in`.
int Run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err);

}  // namespace wdynmo::cli

#endif  // WDYNMO_TOOLS_CLI_H_
