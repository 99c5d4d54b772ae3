#pragma once

#include <stdexcept>
#include <string>

namespace phasefact {

// Base for every numeric precondition failure raised by the library.
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The requested truncation cannot hold the state to the required accuracy.
class TruncationError : public NumericError {
 public:
  using NumericError::NumericError;
};

// An argument lies outside the domain of the operation (|z| >= 1, Re z <= 0, ...).
class DomainError : public NumericError {
 public:
  using NumericError::NumericError;
};

// Boundary grid too coarse for the coefficient bandwidth (M < 2N).
class AliasingError : public NumericError {
 public:
  using NumericError::NumericError;
};

// The computation is possible in principle but numerically meaningless here.
class IllConditionedError : public NumericError {
 public:
  using NumericError::NumericError;
};

// A superposition or normalisation collapsed to (numerically) zero norm.
class DegenerateError : public NumericError {
 public:
  using NumericError::NumericError;
};

}  // namespace phasefact
