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

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qcpart {

/// Malformed circuit text. `line()` is 1-based, or 0 when the error is not tied to a line.
class ParseError : public std::invalid_argument {
   public:
    ParseError(size_t line, const std::string &message)
        : std::invalid_argument(line == 0 ? message : "line " + std::to_string(line) + ": " + message),
          line_(line) {
    }

    size_t line() const {
        return line_;
    }

   private:
    size_t line_;
};

/// Request parameters that cannot be satisfied (K out of range, infeasible part-size cap, ...).
class InfeasibleError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// Problem size above a configured guardrail (DP qubit cap, oracle cap).
class CapExceededError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

}  // namespace qcpart
