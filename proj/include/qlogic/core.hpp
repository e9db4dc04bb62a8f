// Copyright 2026 The qlogic developers

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

#include <complex>
#include <cstddef>
#include <limits>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace qlogic {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using ElementId = std::size_t;

/// Tolerance for all equality, rank, and orthogonality decisions. Double
/// precision on matrices of dimension <= ~8 keeps roundoff far below this.
inline constexpr double kEpsilon = 1e-9;

inline constexpr ElementId kNoElement = std::numeric_limits<ElementId>::max();

/// Base class for all errors raised by the library.
class QLogicError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Operands live in spaces of different dimension.
class DimensionMismatchError : public QLogicError {
  public:
    using QLogicError::QLogicError;
};

/// A vector with norm below tolerance was used where a physical state is
/// required.
class ZeroVectorError : public QLogicError {
  public:
    using QLogicError::QLogicError;
};

/// A (axis, outcome) label outside the catalog.
class InvalidLabelError : public QLogicError {
  public:
    using QLogicError::QLogicError;
};

/// Two context members fail mutual orthogonality.
class NotOrthogonalError : public QLogicError {
  public:
    using QLogicError::QLogicError;
};

/// Context members do not sum to the identity.
class IncompleteSumError : public QLogicError {
  public:
    using QLogicError::QLogicError;
};

/// A context contains the zero or identity projector.
class TrivialMemberError : public QLogicError {
  public:
    using QLogicError::QLogicError;
};

/// A block handed to pasting is not a Boolean algebra.
class BlockNotBooleanError : public QLogicError {
  public:
    using QLogicError::QLogicError;
};

/// Blocks handed to pasting disagree on their bottom or top element.
class IncompatibleTrivialsError : public QLogicError {
  public:
    using QLogicError::QLogicError;
};

/// An element id that does not exist in the structure.
class UnknownElementError : public QLogicError {
  public:
    using QLogicError::QLogicError;
};

/// Event classification requires the preparation to be an atom.
class PreparationNotAtomError : public QLogicError {
  public:
    using QLogicError::QLogicError;
};

/// Lattice closure exceeded the element cap.
class ClosureOverflowError : public QLogicError {
  public:
    using QLogicError::QLogicError;
};

/// A value map does not cover every element of the structure.
class MissingElementError : public QLogicError {
  public:
    using QLogicError::QLogicError;
};

/// Malformed input document (bad JSON shape, missing fields).
class SchemaError : public QLogicError {
  public:
    using QLogicError::QLogicError;
};

/// Well-formed input that violates a structural invariant.
class ValidationError : public QLogicError {
  public:
    using QLogicError::QLogicError;
};

/// A verification battery reported at least one failing check.
class CheckFailedError : public QLogicError {
  public:
    using QLogicError::QLogicError;
};

} // namespace qlogic
