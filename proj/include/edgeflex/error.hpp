#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace edgeflex {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Shape mismatch: non-square input, wrong vector length, dimension mismatch.
class DimensionError : public Error {
public:
    using Error::Error;
};

class SingularMatrixError : public Error {
public:
    using Error::Error;
};

/// A matrix row violates the shape required by reduce_type_matrix.
class RowShapeError : public Error {
public:
    RowShapeError(std::size_t row, const std::string& what)
        : Error("row " + std::to_string(row) + ": " + what), row_(row) {}

    std::size_t row() const noexcept { return row_; }

private:
    std::size_t row_;
};

/// Malformed text input. `line` is 1-based, 0 when not attributable to a line.
class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& what)
        : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

class InvalidGraphError : public Error {
public:
    using Error::Error;
};

/// Odd-cycle enumeration exceeded its cap.
class CycleCapExceeded : public Error {
public:
    using Error::Error;
};

/// Lattice-point work exceeded the configured budget.
class BudgetExceeded : public Error {
public:
    using Error::Error;
};

/// The input does not satisfy an operation's mathematical precondition
/// (not full-dimensional, origin not interior, not spanning, ...).
class PreconditionError : public Error {
public:
    using Error::Error;
};

} // namespace edgeflex
