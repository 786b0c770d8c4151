// Copyright 2026 The entbound Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ENTBOUND_ERRORS_HPP
#define ENTBOUND_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace entbound {

/// Base class of every error thrown by this library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Incompatible matrix shapes (multiplication, decomposition of non-square input, ...).
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// An argument is outside the mathematical domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Malformed text input (state files, numeric fields).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A computed quantity violates a consistency requirement it must satisfy.
class NumericalError : public Error {
 public:
  using Error::Error;
};

/// An iterative routine exhausted its budget before reaching its tolerance.
class ConvergenceError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

/// Why a candidate density matrix was rejected.
enum class ValidationFailure {
  dimension_mismatch,
  not_hermitian,
  trace_not_one,
  not_positive,
};

class ValidationError : public Error {
 public:
  ValidationError(ValidationFailure kind, const std::string& what)
      : Error(what), kind_(kind) {}

  ValidationFailure kind() const noexcept { return kind_; }

 private:
  ValidationFailure kind_;
};

}  // namespace entbound

#endif  // ENTBOUND_ERRORS_HPP
