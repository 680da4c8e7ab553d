// Copyright 2026 The qmds Authors
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

#ifndef QMDS_CLI_H
#define QMDS_CLI_H

#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "qmds/fourier_code.h"

namespace qmds {

// Exit codes besides the verifier's 0 / 1 / 2.
inline constexpr int kExitError = 3;

// Runs one command line (without the program name). Returns the exit code.
int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

// "0,2,5", "0-5", "0..5", mixtures of those, or "start:step:count".
RowSelection parse_rows(std::size_t n, std::string_view text);

}  // namespace qmds

#endif
