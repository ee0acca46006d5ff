// Copyright 2026 The mdiasym Authors
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

namespace mdiasym {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Operand dimensions are incompatible with the requested operation.
class ShapeError : public Error {
public:
  using Error::Error;
};

/// An input lies outside the mathematical domain of an operation
/// (non-Hermitian matrix, non-unit axis, |r| > 1, unnormalized state, ...).
class DomainError : public Error {
public:
  using Error::Error;
};

/// Iterative numerics failed to converge or produced an inconsistent result.
class NumericError : public Error {
public:
  using Error::Error;
};

/// A matrix expected to be positive semidefinite has a clearly negative eigenvalue.
class NotPsdError : public DomainError {
public:
  using DomainError::DomainError;
};

/// Invalid scan or command configuration.
class ConfigError : public Error {
public:
  using Error::Error;
};

} // namespace mdiasym
