// Copyright 2026 The labelsim Authors
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

namespace labelsim {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Malformed register: duplicate names or labels, or a subsystem of dimension < 2.
class RegisterError : public Error {
  public:
    using Error::Error;
};

/// A subsystem name or basis label that the register does not define.
class LabelError : public Error {
  public:
    using Error::Error;
};

/// An operation whose parameters do not describe a unitary (non-unitary
/// matrix, non-permutation relabeling, colliding labels, zero norm).
class OperationError : public Error {
  public:
    using Error::Error;
};

/// Post-selection or projection onto an outcome of (numerically) zero probability.
class ImpossibleOutcome : public Error {
  public:
    using Error::Error;
};

/// Time reversal requested across a non-unitary log entry.
class NonInvertible : public Error {
  public:
    using Error::Error;
};

/// Grid construction or projection that violates resolution/containment rules.
class GridError : public Error {
  public:
    using Error::Error;
};

/// Scenario name or parameter outside the documented schema.
class ParameterError : public Error {
  public:
    using Error::Error;
};

} // namespace labelsim
