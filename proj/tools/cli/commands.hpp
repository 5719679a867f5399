// SPDX-License-Identifier: Apache-2.0
//
// risdof: sum-DoF analysis of active-RIS-assisted two-user MIMO interference channels
// Copyright (C) 2026 The risdof Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

// Command-line frontend. Each subcommand writes its report to `out`,
// diagnostics to `err`, and returns the process exit code.

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace risdof::cli {

enum ExitCode : int {
  kOk = 0,
  kCheckFailed = 1,  // failed verification, mismatch, unwritable output
  kUsage = 2,        // invalid arguments
};

// `args` excludes the program name, e.g. {"compute", "--m1", "6", ...}.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace risdof::cli
