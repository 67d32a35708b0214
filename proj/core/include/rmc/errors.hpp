#pragma once

#include <stdexcept>
#include <string>

namespace rmc {

// Base class for every error thrown by this library.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Mathematically invalid input: division by zero, reducible modulus,
// out-of-range rank/trace index, dependent basis, and the like.
struct domain_error : error {
    using error::error;
};

// Two operands belong to different fields (owner tags differ).
struct field_mismatch_error : error {
    using error::error;
};

// An exhaustive enumeration would exceed the configured budget.
struct budget_error : error {
    using error::error;
};

// Malformed textual input (code files, field specs, element literals).
struct parse_error : error {
    parse_error(const std::string& what, int line = 0)
        : error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
          line_no(line) {}
    int line_no;
};

}  // namespace rmc
