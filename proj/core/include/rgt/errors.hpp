#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rgt {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A rotation system that violates the data-model invariants
/// (half-edge missing, duplicated, or appearing more than twice).
class StructuralError : public Error {
public:
    using Error::Error;
};

/// An argument outside the graph: unknown edge, vertex, catalog key, word.
class ArgumentError : public Error {
public:
    using Error::Error;
};

/// A well-formed argument that violates an operation's precondition
/// (loop where a proper edge is required, zero polynomial, empty side
/// in a face-statistics split, ...).
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// An enumeration that would exceed the configured subset cap.
class CapExceededError : public Error {
public:
    using Error::Error;
};

/// Text that does not parse as a ribbon-graph file; carries a position.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t line, std::size_t column)
        : Error(what + " (line " + std::to_string(line) + ", column " +
                std::to_string(column) + ")"),
          line_(line),
          column_(column) {}

    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

}  // namespace rgt
