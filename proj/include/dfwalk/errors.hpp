// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dfwalk {

/// Base class for every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed input text. `line` is 1-based; `column` is a 1-based byte
/// offset within the line, or 0 when not meaningful.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t line, std::size_t column = 0)
        : Error(format(what, line, column)), line_(line), column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    static std::string format(const std::string& what, std::size_t line, std::size_t column) {
        std::string s = "line " + std::to_string(line);
        if (column != 0) {
            s += ", byte " + std::to_string(column);
        }
        return s + ": " + what;
    }

    std::size_t line_;
    std::size_t column_;
};

/// Structurally invalid graph: self-loop, endpoint out of range, or a
/// connectivity requirement that is not met.
class GraphError : public Error {
public:
    using Error::Error;
};

/// Argument outside an operation's documented domain.
class DomainError : public Error {
public:
    using Error::Error;
};

/// A linear-domain result is not representable as a finite double.
class OverflowError : public Error {
public:
    using Error::Error;
};

/// The eigensolver did not converge.
class ConvergenceError : public Error {
public:
    using Error::Error;
};

/// A statistic is undefined for the given input (constant sequence,
/// single-class labels).
class DegenerateError : public Error {
public:
    using Error::Error;
};

} // namespace dfwalk
