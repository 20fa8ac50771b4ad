#pragma once

#include <stdexcept>
#include <string>

namespace quest {

// Input exceeds a hard size guard (brute-force state counts, statevector
// qubit limits). Deliberately distinct from std::domain_error so callers can
// turn "too big" into a skip instead of a failure.
class SizeGuardError : public std::runtime_error {
public:
    explicit SizeGuardError(const std::string& what) : std::runtime_error(what) {}
};

// The requested encoding does not cover this input shape (e.g. building a
// single-segment QUBO from a multi-segment instance).
class UnsupportedEncodingError : public std::domain_error {
public:
    explicit UnsupportedEncodingError(const std::string& what) : std::domain_error(what) {}
};

// Malformed textual input. line() is 1-based; 0 means "no line info".
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what, int line = 0)
        : std::runtime_error(line > 0 ? what + " (line " + std::to_string(line) + ")" : what),
          line_(line) {}

    int line() const { return line_; }

private:
    int line_;
};

} // namespace quest
