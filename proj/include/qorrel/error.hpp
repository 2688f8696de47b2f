#pragma once

#include <stdexcept>
#include <string>

namespace qorrel {

/// Bad arguments: out-of-range angles, weights off the simplex, negative times.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Operand shapes do not fit the operation.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Something numerical went wrong at run time (invalid state, no convergence, pole).
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A matrix failed the Hermitian / unit-trace / positivity checks of a density matrix.
class InvalidState : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

/// The dephasing rate diverges because the decoherence factor crosses zero.
class PoleError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

}  // namespace qorrel
