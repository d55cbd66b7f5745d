// Copyright 2026 The discord_lab Authors
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

namespace discord {

/// Base of every exception thrown by the library. The C API maps each
/// subclass onto one status code.
class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// A matrix or qubit count exceeds the configured maximum.
class CapacityError : public Error {
   public:
    using Error::Error;
};

/// Malformed argument: wrong vector length, empty set, value out of range.
class ArgumentError : public Error {
   public:
    using Error::Error;
};

/// Matrix dimension does not match the subsystem layout it is paired with.
class LayoutError : public Error {
   public:
    using Error::Error;
};

/// Input that should be Hermitian is not.
class SymmetryError : public Error {
   public:
    explicit SymmetryError(double violation)
        : Error("matrix is not Hermitian: max |m - m^dagger| = " + std::to_string(violation)),
          violation_(violation) {}

    double violation() const noexcept { return violation_; }

   private:
    double violation_;
};

/// A density-matrix invariant failed. The message names the invariant and
/// the size of the violation.
class ValidationError : public Error {
   public:
    using Error::Error;
};

/// The objective returned a non-finite value.
class EvaluationError : public Error {
   public:
    using Error::Error;
};

/// A file could not be read or written.
class IoError : public Error {
   public:
    using Error::Error;
};

}  // namespace discord
