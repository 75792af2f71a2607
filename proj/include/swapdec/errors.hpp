// Copyright 2026 The swapdec Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace swapdec {

/// Base of every error raised by the library. `exit_code()` is the CLI
/// process status the error maps to.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
    [[nodiscard]] virtual int exit_code() const noexcept { return 1; }
};

/// Malformed input: non-unitary matrix, bad config field, invalid partition.
class ValidationError : public Error {
  public:
    using Error::Error;
};

class BoundsError : public Error {
  public:
    using Error::Error;
};

/// A logical role or observable id that does not resolve.
class LookupError : public Error {
  public:
    using Error::Error;
};

/// Qubit cap or reduced-state size cap exceeded.
class ResourceError : public Error {
  public:
    using Error::Error;
    [[nodiscard]] int exit_code() const noexcept override { return 2; }
};

class NumericalError : public Error {
  public:
    using Error::Error;
};

class InsufficientDataError : public Error {
  public:
    using Error::Error;
    [[nodiscard]] int exit_code() const noexcept override { return 3; }
};

} // namespace swapdec
