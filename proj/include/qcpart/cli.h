// Copyright 2026 The qcpart Authors
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

#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace qcpart {

/// Process exit codes.
enum ExitCode : int {
    kExitOk = 0,
    kExitParseError = 1,
    kExitInfeasible = 2,
    kExitCapExceeded = 3,
};

/// "3", "3,5", "1..4" or any comma-separated mix; values in ascending input order.
std::vector<uint32_t> parse_int_list(std::string_view text);

struct GeneratorSpec {
    std::string name;
    std::vector<uint32_t> sizes;
};

/// "qft:8" or "qft:4..8".
GeneratorSpec parse_generator_spec(std::string_view text);

/// Runs the qcpart command line (argv[0] is the program name). The report goes to `out`,
/// diagnostics to `err`.
int run_cli(const std::vector<std::string> &argv, std::ostream &out, std::ostream &err);

}  // namespace qcpart
