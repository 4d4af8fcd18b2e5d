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

#ifndef VQF_ERRORS_H_
#define VQF_ERRORS_H_

#include <stdexcept>
#include <string>

namespace vqf {

// Root of every error the engine raises. The CLI maps subclasses onto exit
// codes (see ExitCodeFor in cli.h).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad flags, unknown formats, unknown layouts, schema violations.
class ConfigError : public Error {
 public:
  using Error::Error;
};

// File system failures and malformed or truncated video payloads.
class DecodeError : public Error {
 public:
  using Error::Error;
};

// A plane is too small for the requested scale, window or block.
class ScaleError : public Error {
 public:
  using Error::Error;
};

// A caller broke an operation's precondition (dimension mismatch, empty
// series, non-PSD covariance, ...).
class ContractViolation : public Error {
 public:
  using Error::Error;
};

// SVR solver failures and other numerical breakdowns.
class NumericalError : public Error {
 public:
  using Error::Error;
};

// Correlation is undefined for the given inputs.
class EvaluationError : public Error {
 public:
  using Error::Error;
};

// The monotonicity audit cannot run (incomplete or empty grid).
class AuditError : public Error {
 public:
  using Error::Error;
};

}  // namespace vqf

#endif  // VQF_ERRORS_H_
