#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace blowup {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A caller-supplied argument violates an operation's precondition.
class InvalidParameter : public Error {
public:
    using Error::Error;
};

/// Malformed input file. `line` is 1-based and 0 when not applicable
/// (JSON schema errors carry the offending field name instead).
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t line, std::string field = {})
        : Error(what), line_(line), field_(std::move(field)) {}

    std::size_t line() const noexcept { return line_; }
    const std::string& field() const noexcept { return field_; }

private:
    std::size_t line_;
    std::string field_;
};

/// A witness (F, L, d) that cannot be normalized or is not normalized.
class InvalidWitness : public Error {
public:
    using Error::Error;
};

/// Raised when a guaranteed outcome fails to materialize; always a bug.
class InternalError : public Error {
public:
    using Error::Error;
};

} // namespace blowup
