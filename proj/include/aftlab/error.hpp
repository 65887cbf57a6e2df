// Copyright 2026 The aftlab Authors
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

#include <stdexcept>
#include <string>

namespace aftlab {

enum class ErrorKind {
  kUsage,         // bad command line or configuration
  kParse,         // malformed program text
  kPrecondition,  // wrong program class, inconsistent pair, unknown atom
  kCapExceeded,   // universe larger than the configured atom cap
  kLawViolation,  // a checked property failed
};

// All library errors. The kind decides the CLI exit code.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

  int exit_code() const noexcept {
    switch (kind_) {
      case ErrorKind::kUsage:
        return 1;
      case ErrorKind::kParse:
      case ErrorKind::kPrecondition:
      case ErrorKind::kCapExceeded:
        return 2;
      case ErrorKind::kLawViolation:
        return 3;
    }
    return 1;
  }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail_precondition(const std::string& what) {
  throw Error(ErrorKind::kPrecondition, what);
}

}  // namespace aftlab
