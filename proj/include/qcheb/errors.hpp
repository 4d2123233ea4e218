// Copyright 2026 The qcheb Authors
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
#pragma once

#include <stdexcept>
#include <string>

namespace qcheb {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Bad configuration values (qubit counts out of range, invalid JSON fields).
class ConfigError : public Error {
  public:
    using Error::Error;
};

/// API misuse: index out of range, size mismatch, unnormalized input.
class UsageError : public Error {
  public:
    using Error::Error;
};

/// Argument outside the mathematical domain of a function, e.g. |x| > 1.
class DomainError : public Error {
  public:
    using Error::Error;
};

/// Non-finite values or degenerate numerics during a computation.
class NumericalError : public Error {
  public:
    using Error::Error;
};

/// File could not be read or written.
class IoError : public Error {
  public:
    using Error::Error;
};

/// A construction failed its own equivalence check.
class VerificationError : public Error {
  public:
    using Error::Error;
};

} // namespace qcheb
