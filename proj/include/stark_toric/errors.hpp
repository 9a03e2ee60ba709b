#pragma once

#include <stdexcept>
#include <string>

namespace stark_toric {

// Argument outside the mathematical domain of an operation (m >= 1, q = 0, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Field strength outside the toric regime 0 < eps < 1/16.
class RegimeError : public DomainError {
public:
    using DomainError::DomainError;
};

// Initial state for a level-set restricted operation is off the zero level.
class LevelSetError : public DomainError {
public:
    using DomainError::DomainError;
};

// Base for failures of a numerical procedure on valid input.
class NumericalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ToleranceError : public NumericalError {
public:
    using NumericalError::NumericalError;
};

// Unregularized trajectory came closer than the collision cutoff.
class CollisionError : public NumericalError {
public:
    using NumericalError::NumericalError;
};

// A MINUS oscillator trajectory left the bounded well.
class EscapeError : public NumericalError {
public:
    using NumericalError::NumericalError;
};

class NoReturnError : public NumericalError {
public:
    using NumericalError::NumericalError;
};

// Sampled data violated a structural invariant (points to a numerics bug).
class InvariantError : public NumericalError {
public:
    using NumericalError::NumericalError;
};

}  // namespace stark_toric
