#pragma once

#include <stdexcept>
#include <string>

namespace wedge {

// Malformed or invalid input text. Carries the 1-based line number when the
// problem is tied to a specific line (0 otherwise).
struct ParseError : std::runtime_error {
    int line = 0;
    explicit ParseError(const std::string& what, int line_no = 0)
        : std::runtime_error(what), line(line_no) {}
};

// A required setting is missing or inconsistent (e.g. an infinite death with
// no truncation horizon).
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An instance exceeds a desk-scale guard and the operation refuses to run.
struct GuardError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace wedge
