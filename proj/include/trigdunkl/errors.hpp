#pragma once

#include <stdexcept>
#include <string>

namespace trigdunkl {

/// Invalid family/rank combination for a root system.
class ConstructionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Input outside the domain of an operation (non-integer coupling, wrong type, bad index).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Substitution hit a pole of a rational function.
class EvaluationError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// An exact division by (1 - e^{-alpha}) left a remainder.
class DivisibilityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A caller-side precondition (W-invariance etc.) does not hold.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// No admissible generic direction separated the eigenvalues.
class ResonanceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed textual input.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace trigdunkl
