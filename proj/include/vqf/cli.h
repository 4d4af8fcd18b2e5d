// Copyright 2026 The vqfusion Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef VQF_CLI_H_
#define VQF_CLI_H_

#include <exception>
#include <iosfwd>
#include <string>
#include <vector>

namespace vqf::cli {

enum ExitCode {
  kExitOk = 0,
  kExitUsage = 1,      // bad flags, config, schema, scale or audit errors
  kExitIo = 2,         // unreadable/unwritable files, corrupt video
  kExitNumerical = 3,  // solver failure, undefined correlation
};

int ExitCodeFor(const std::exception& e);

// Entry point behind the vqfusion binary. args excludes the program name.
// Results go to `out`, diagnostics and warnings to `err`.
int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace vqf::cli

#endif  // VQF_CLI_H_
