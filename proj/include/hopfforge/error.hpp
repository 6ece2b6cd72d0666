#pragma once

#include <stdexcept>
#include <string>

namespace hopfforge {

// Base of every error raised by the engine.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input problems: malformed files, bad shapes, wrong usage.
class InputError : public Error {
 public:
  using Error::Error;
};

class ParseError : public InputError {
 public:
  using InputError::InputError;
};

class SchemaError : public InputError {
 public:
  using InputError::InputError;
};

class DimensionMismatch : public InputError {
 public:
  using InputError::InputError;
};

class UsageError : public InputError {
 public:
  using InputError::InputError;
};

// The data is well formed but fails a mathematical requirement.
class MathError : public Error {
 public:
  using Error::Error;
};

class InvalidGroup : public MathError {
 public:
  using MathError::MathError;
};

class InvalidCrossedModule : public MathError {
 public:
  using MathError::MathError;
};

class NotAProjection : public MathError {
 public:
  using MathError::MathError;
};

class NonInvertibleAntipode : public MathError {
 public:
  using MathError::MathError;
};

class NonInvertibleBraiding : public MathError {
 public:
  using MathError::MathError;
};

class CompatibilityFailed : public MathError {
 public:
  using MathError::MathError;
};

class HypothesisFailed : public MathError {
 public:
  using MathError::MathError;
};

class NestingTooDeep : public MathError {
 public:
  using MathError::MathError;
};

// Raised when a result that must hold for valid input does not; these point
// at an internal inconsistency rather than at the input.
class InternalError : public Error {
 public:
  using Error::Error;
};

class ClosureFailure : public InternalError {
 public:
  using InternalError::InternalError;
};

class IsoFailure : public InternalError {
 public:
  using InternalError::InternalError;
};

}  // namespace hopfforge
