// Copyright 2026 The gpolar Authors
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

namespace gpolar {

/// Base class of every error thrown by this library.
class Error : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// An element id outside 0..order-1 of its group.
class InvalidElementError : public Error {
  using Error::Error;
};

/// A multiplication table that violates the group axioms. The message names a witness.
class AxiomError : public Error {
  using Error::Error;
};

/// Input group larger than the dense-table bound.
class SizeError : public Error {
  using Error::Error;
};

/// A subgroup that was required to be normal is not.
class NormalityError : public Error {
  using Error::Error;
};

/// Unsupported or inconsistent Pauli specification.
class SpecError : public Error {
  using Error::Error;
};

/// One of the five factorisation conditions fails where it is required.
/// `condition()` is the condition number (1..5).
class ConditionError : public Error {
 public:
  ConditionError(int condition, const std::string& what) : Error(what), condition_(condition) {}
  int condition() const noexcept { return condition_; }

 private:
  int condition_;
};

/// A form that must be non-degenerate (or non-singular) is not.
class DegeneracyError : public Error {
  using Error::Error;
};

/// Two independent computations of the same quantity disagree. Signals bad
/// input data or an internal defect; never expected on valid groups.
class InconsistencyError : public Error {
  using Error::Error;
};

/// Malformed input document.
class ParseError : public Error {
  using Error::Error;
};

}  // namespace gpolar
