#pragma once

#include <stdexcept>
#include <string>

namespace dualif {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Malformed expression source. `position` is the 0-based byte offset of the
/// offending token.
class SyntaxError : public Error {
public:
    SyntaxError(std::size_t position, const std::string& msg)
        : Error("syntax error at position " + std::to_string(position) + ": " + msg),
          position(position) {}
    std::size_t position;
};

/// Identifier that is neither the declared variable, a known constant, nor a
/// known function.
class UnknownIdentifierError : public Error {
public:
    explicit UnknownIdentifierError(const std::string& name)
        : Error("unknown identifier: " + name), name(name) {}
    std::string name;
};

/// Evaluation left the function's domain (log of a non-positive value, sqrt of
/// a negative, division by zero) or the result overflowed to a non-finite
/// value. `overflow` distinguishes the latter; callers integrating 1/f use it
/// to treat f = inf as a limit rather than a failure.
class DomainError : public Error {
public:
    explicit DomainError(const std::string& msg, bool overflow = false)
        : Error(msg), overflow(overflow) {}
    bool overflow;
};

class UnknownModelError : public Error {
public:
    explicit UnknownModelError(const std::string& name)
        : Error("unknown model: " + name), name(name) {}
    std::string name;
};

class InvalidModelError : public Error {
public:
    explicit InvalidModelError(const std::string& msg) : Error(msg) {}
};

/// Adaptive quadrature could not meet the requested tolerance within the
/// subdivision budget.
class QuadratureError : public Error {
public:
    explicit QuadratureError(const std::string& msg) : Error(msg) {}
};

/// An improper phase-bound integral does not converge on the named side.
class DivergentError : public Error {
public:
    explicit DivergentError(const std::string& side)
        : Error("phase bound divergent on " + side + " side"), side(side) {}
    std::string side;
};

/// Root finding failed to converge.
class ConvergenceError : public Error {
public:
    explicit ConvergenceError(const std::string& msg) : Error(msg) {}
};

/// Wrap-mode simulation requested for a model whose phase interval is not
/// compactified.
class InvalidWrapError : public Error {
public:
    explicit InvalidWrapError(const std::string& msg) : Error(msg) {}
};

/// Direct voltage simulation exceeded the state cap with no phase fallback.
class DivergenceGuardError : public Error {
public:
    explicit DivergenceGuardError(const std::string& msg) : Error(msg) {}
};

/// Value outside the mappable phase interval.
class RangeError : public Error {
public:
    explicit RangeError(const std::string& msg) : Error(msg) {}
};

class InvalidExponentError : public Error {
public:
    explicit InvalidExponentError(const std::string& msg) : Error(msg) {}
};

class NegativeInputError : public Error {
public:
    explicit NegativeInputError(const std::string& msg) : Error(msg) {}
};

}  // namespace dualif
