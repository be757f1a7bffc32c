#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pga {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class SyntaxError : public Error {
public:
    SyntaxError(const std::string& what, std::size_t line, std::size_t column)
        : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + what),
          line_(line), column_(column) {}

    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

/// Missing, duplicated or malformed `:- analyze/2` directive.
class DirectiveError : public Error {
public:
    using Error::Error;
};

/// Operands of a lattice operation are not defined over the expected variables.
class ScopeMismatch : public Error {
public:
    using Error::Error;
};

class ScopeOverlap : public Error {
public:
    using Error::Error;
};

class UnknownParam : public Error {
public:
    using Error::Error;
};

class UndefinedPredicate : public Error {
public:
    using Error::Error;
};

class IterationLimit : public Error {
public:
    using Error::Error;
};

class BudgetExceeded : public Error {
public:
    using Error::Error;
};

class DomainMismatch : public Error {
public:
    using Error::Error;
};

}  // namespace pga
