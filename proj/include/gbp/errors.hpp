#pragma once

#include <stdexcept>
#include <string>

namespace gbp {

// Error taxonomy mirrored by the CLI exit codes: input problems (exit 1),
// resource limits (exit 2), broken internal invariants (exit 3).

struct MalformedInputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParseError : MalformedInputError {
    ParseError(const std::string& msg, long line)
        : MalformedInputError("parse error at line " + std::to_string(line) + ": " + msg),
          line_number(line) {}
    long line_number;
};

struct EmptyInstanceError : MalformedInputError {
    EmptyInstanceError() : MalformedInputError("instance has no vertices") {}
};

struct MalformedSequenceError : MalformedInputError {
    using MalformedInputError::MalformedInputError;
};

struct GuardExceededError : MalformedInputError {
    using MalformedInputError::MalformedInputError;
};

// A computed result contradicts a proven invariant; never caused by user input.
struct InternalError : std::logic_error {
    using std::logic_error::logic_error;
};

}  // namespace gbp
