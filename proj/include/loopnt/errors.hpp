#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace loopnt {

// Base class for everything this library throws on purpose.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// ---- exact arithmetic ----
struct DivisionByZero : Error {
    DivisionByZero() : Error("division by zero") {}
};
struct NegativeInput : Error {
    explicit NegativeInput(const std::string& what) : Error(what) {}
};
struct RadicandTooLarge : Error {
    explicit RadicandTooLarge(const std::string& what) : Error(what) {}
};
struct IncompatibleRadicands : Error {
    IncompatibleRadicands() : Error("incompatible radicands") {}
};

// ---- linear algebra ----
struct DimensionMismatch : Error {
    explicit DimensionMismatch(const std::string& what) : Error(what) {}
};
struct SingularMatrix : Error {
    SingularMatrix() : Error("matrix is singular") {}
};
struct ZeroRow : Error {
    ZeroRow() : Error("guard row is zero") {}
};

// ---- parsing ----
// Carries a 1-based source position. Scalar parsing reports col only (line 1).
struct SyntaxError : Error {
    std::size_t line;
    std::size_t col;
    SyntaxError(const std::string& what, std::size_t l, std::size_t c)
        : Error(what + " (line " + std::to_string(l) + ", col " + std::to_string(c) + ")"),
          line(l), col(c) {}
};
struct NonLinearTerm : SyntaxError {
    using SyntaxError::SyntaxError;
};
struct NonHomogeneous : SyntaxError {
    using SyntaxError::SyntaxError;
};
struct UnknownVariable : SyntaxError {
    using SyntaxError::SyntaxError;
};
struct DuplicateAssignment : SyntaxError {
    using SyntaxError::SyntaxError;
};

// ---- analysis preconditions ----
struct UnsupportedDimension : Error {
    explicit UnsupportedDimension(const std::string& what) : Error(what) {}
};
struct UnsupportedGuard : Error {
    explicit UnsupportedGuard(const std::string& what) : Error(what) {}
};

// A branch precondition failed exact re-checking. Signals a bug in this
// library (or an NTSet constructed outside its invariants), never expected.
struct InternalInvariantViolation : Error {
    explicit InternalInvariantViolation(const std::string& what) : Error(what) {}
};

// ---- simulation / demo ----
struct StepBudgetZero : Error {
    StepBudgetZero() : Error("step budget must be positive") {}
};
struct ZeroPolynomial : Error {
    ZeroPolynomial() : Error("polynomial is identically zero") {}
};

} // namespace loopnt
