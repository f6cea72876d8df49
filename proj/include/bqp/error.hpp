#pragma once

#include <stdexcept>
#include <string>

namespace bqp {

/// Shapes of vectors/matrices disagree with the instance they are used with.
class DimensionError : public std::invalid_argument {
 public:
    using std::invalid_argument::invalid_argument;
};

/// Input violates a solver or transformation precondition (negative entry
/// for min-cut, non-binary matrix, inconsistent decomposition, ...).
class PreconditionError : public std::invalid_argument {
 public:
    using std::invalid_argument::invalid_argument;
};

/// A solver declined to run because a configured size limit was exceeded.
class RefusalError : public std::runtime_error {
 public:
    RefusalError(const std::string& what, std::size_t limit, std::size_t measured)
        : std::runtime_error(what), limit_(limit), measured_(measured) {}

    std::size_t limit() const { return limit_; }
    std::size_t measured() const { return measured_; }

 private:
    std::size_t limit_;
    std::size_t measured_;
};

/// Malformed instance text. `line` is 1-based, 0 when unknown.
class ParseError : public std::runtime_error {
 public:
    ParseError(const std::string& what, std::size_t line)
        : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}

    std::size_t line() const { return line_; }

 private:
    std::size_t line_;
};

}  // namespace bqp
