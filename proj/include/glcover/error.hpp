#pragma once

#include <stdexcept>
#include <string>

namespace glcover {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
public:
    DivisionByZero() : Error("division by the zero rational function") {}
};

/// Evaluation or expansion point is a root of the denominator.
class PoleError : public Error {
public:
    using Error::Error;
};

/// A precondition on an argument does not hold.
class DomainError : public Error {
public:
    using Error::Error;
};

/// Power series over different coefficient rings or truncation orders.
class RingMismatch : public Error {
public:
    using Error::Error;
};

class BudgetExceeded : public Error {
public:
    using Error::Error;
};

/// (n, q) outside the regimes where an exact closed value is known.
class UnsupportedRegime : public Error {
public:
    using Error::Error;
};

/// An identity that must hold exactly failed; never silently repaired.
class ConsistencyError : public Error {
public:
    using Error::Error;
};

} // namespace glcover
