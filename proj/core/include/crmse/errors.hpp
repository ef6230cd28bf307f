// crmse/errors.hpp

// Copyright 2026  The crmse authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#ifndef CRMSE_ERRORS_HPP
#define CRMSE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace crmse {

/// Base class for all crmse failures. The concrete subclass decides the
/// process exit code used by the command-line tool.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// File-system problems: missing, unreadable, malformed or unwritable files.
class IoError : public Error {
 public:
  using Error::Error;
  static constexpr int kExitCode = 2;
};

/// Invalid static configuration: bad frame sizes, mismatched dimensions,
/// misuse of an API contract.
class ConfigError : public Error {
 public:
  using Error::Error;
  static constexpr int kExitCode = 3;
};

/// Well-formed configuration applied to unusable runtime data: signals that
/// are too short, silent where energy is required, or shape mismatches
/// between paired inputs.
class InputError : public Error {
 public:
  using Error::Error;
  static constexpr int kExitCode = 4;
};

/// Non-finite values encountered during numerical work.
class NumericalError : public Error {
 public:
  using Error::Error;
  static constexpr int kExitCode = 5;
};

}  // namespace crmse

#endif  // CRMSE_ERRORS_HPP
