#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mcanon {

/// Mismatched variable counts between monomials, ideals or multidegrees.
class DimensionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A pair (I, J) that does not satisfy J strictly contained in I.
class ValidationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// An operation was called outside its documented domain.
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A configured cap (box volume, search nodes, wall time) was exceeded.
/// Distinct from "no answer": callers must not treat it as a negative result.
class ResourceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Something that the algebra guarantees cannot happen did happen.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t line, std::size_t column)
        : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + what),
          line_(line), column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

}  // namespace mcanon
