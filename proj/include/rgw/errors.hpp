#pragma once

#include <stdexcept>
#include <string>

namespace rgw {

// Thrown for out-of-range degrees, mismatched partition sizes, bad operator
// arities and malformed CLI/DSL input. CLI maps this to exit code 3.
struct argument_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Thrown when a truncated u-series does not carry enough coefficients for a
// requested comparison or extraction. CLI maps this to exit code 4.
struct truncation_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Thrown when an internal consistency check (two routes to the same value)
// fails. CLI maps this to exit code 2.
struct verification_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace rgw
