#pragma once

#include <stdexcept>
#include <string>

namespace potts {

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct ContextMismatch : Error {
    ContextMismatch() : Error("operands carry different p-adic contexts") {}
};

struct DivisionByZero : Error {
    DivisionByZero() : Error("division by zero at working precision") {}
};

// Raised when an operation needs significant digits that cancellation destroyed.
struct PrecisionExhausted : Error {
    explicit PrecisionExhausted(const std::string& what) : Error(what) {}
};

struct DomainError : Error {
    explicit DomainError(const std::string& what) : Error(what) {}
};

struct TailTooFat : Error {
    explicit TailTooFat(const std::string& what) : Error(what) {}
};

struct SingularDenominator : Error {
    SingularDenominator() : Error("denominator is not a unit") {}
};

struct ConditionL1Violated : Error {
    ConditionL1Violated() : Error("weight violates the strict ratio condition max_i |lambda(i)/lambda(0)| < 1") {}
};

struct NonConvergence : Error {
    explicit NonConvergence(const std::string& what) : Error(what) {}
};

struct StateSpaceTooLarge : Error {
    explicit StateSpaceTooLarge(const std::string& what) : Error(what) {}
};

struct OutOfTree : Error {
    explicit OutOfTree(const std::string& what) : Error(what) {}
};

struct ParseError : Error {
    explicit ParseError(const std::string& what) : Error(what) {}
};

struct ConfigError : Error {
    explicit ConfigError(const std::string& what) : Error(what) {}
};

}  // namespace potts
