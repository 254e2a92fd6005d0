#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace inflect {

/// Base class for every exception thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed or out-of-range input (bad polynomial text, non-flat family, ...).
class InvalidInput : public Error {
public:
    using Error::Error;
};

/// Polynomial text that does not match the grammar.
class ParseError : public InvalidInput {
public:
    ParseError(const std::string& what, std::size_t position)
        : InvalidInput(what + " at position " + std::to_string(position)), position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

/// A request that falls outside what the engine computes (nonlinear families with n >= 2).
class NotImplemented : public Error {
public:
    using Error::Error;
};

/// The curve is degenerate relative to the family; `reason()` names the case.
class Degenerate : public Error {
public:
    Degenerate(const std::string& reason, const std::string& detail)
        : Error(reason + ": " + detail), reason_(reason) {}

    const std::string& reason() const noexcept { return reason_; }

private:
    std::string reason_;
};

} // namespace inflect
