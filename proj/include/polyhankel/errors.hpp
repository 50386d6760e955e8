#pragma once

#include <stdexcept>
#include <string>

namespace polyhankel {

/// Base for failures of a computation on valid input (overflow, caps, convergence).
/// Argument errors use std::invalid_argument instead.
class ComputationError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class OverflowLabel : public ComputationError {
public:
  using ComputationError::ComputationError;
};

class PrimeTableExhausted : public ComputationError {
public:
  using ComputationError::ComputationError;
};

class MatrixTooLarge : public ComputationError {
public:
  using ComputationError::ComputationError;
};

class WidthTooLarge : public ComputationError {
public:
  using ComputationError::ComputationError;
};

class NoConvergence : public ComputationError {
public:
  using ComputationError::ComputationError;
};

class NonFinite : public ComputationError {
public:
  using ComputationError::ComputationError;
};

} // namespace polyhankel
