#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace binform {

/// Base class for everything this library throws on purpose.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Bad input or violated precondition (zero form, degree too small,
/// multiple complex roots where square-freeness is required, ...).
class InputError : public Error {
public:
    using Error::Error;
};

/// Syntax or semantic error while parsing a form expression.
/// `position` is a 0-based byte offset into the source text.
class ParseError : public InputError {
public:
    ParseError(const std::string& msg, std::size_t position)
        : InputError(msg + " (at position " + std::to_string(position) + ")"),
          position_(position) {}

    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

/// Floating-point sampling broke down (undersampled winding loop,
/// vanishing gradient norm, ill-conditioned witness solve).
class NumericError : public Error {
public:
    using Error::Error;
};

/// A state the mathematics rules out. Reaching this is a bug, and the
/// CLI maps it to its own exit code so fuzzing scripts can spot it.
class InternalError : public Error {
public:
    using Error::Error;
};

}  // namespace binform
