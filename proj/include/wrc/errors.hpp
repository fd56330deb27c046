#pragma once

#include <stdexcept>
#include <string>

namespace wrc {

/// Base class for all library errors.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Operands live over different variable sets.
struct ambient_mismatch : error {
    using error::error;
};

/// An operation that needs a nonzero polynomial was given zero.
struct zero_polynomial_error : error {
    using error::error;
};

/// Invalid user-supplied parameter (d < 1, bad format string, ...).
struct parameter_error : error {
    using error::error;
};

/// A documented precondition was violated by the caller.
struct precondition_error : error {
    using error::error;
};

/// A configured resource budget (pair queue, ...) was exhausted.
struct budget_exceeded : error {
    using error::error;
};

/// Malformed textual input.
struct parse_error : error {
    using error::error;
};

} // namespace wrc
