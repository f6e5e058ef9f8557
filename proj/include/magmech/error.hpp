// Copyright 2026 The Magmech Authors
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

#ifndef MAGMECH_ERROR_HPP_
#define MAGMECH_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace magmech {

// Process exit codes used by the CLI. Library errors carry the code they
// should map to so that main() stays a thin translation layer.
enum class ExitCode : int {
  ok = 0,
  parse_error = 2,
  validation_error = 3,
  physics_flag_failure = 4,
  module_error = 5,
};

class Error : public std::runtime_error {
 public:
  Error(ExitCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ExitCode code() const { return code_; }

 private:
  ExitCode code_;
};

// Config file could not be read or is not syntactically valid.
class ParseError : public Error {
 public:
  explicit ParseError(const std::string& what)
      : Error(ExitCode::parse_error, what) {}
};

// Config is syntactically fine but violates a declared invariant. The
// message lists every violation, not just the first.
class ValidationError : public Error {
 public:
  explicit ValidationError(const std::string& what)
      : Error(ExitCode::validation_error, what) {}
};

// A computation inside a module failed (singular geometry, heating regime,
// integration blow-up, ...). Messages are prefixed with the module name.
class ModuleError : public Error {
 public:
  explicit ModuleError(const std::string& what)
      : Error(ExitCode::module_error, what) {}
};

}  // namespace magmech

#endif  // MAGMECH_ERROR_HPP_
