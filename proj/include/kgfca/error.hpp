#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace kgfca {

// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Unrecoverable input failures: truncated streams, broken context or rule
// files. Carries the 1-based line number when one is known (0 otherwise).
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t line = 0)
        : Error(line ? what + " (line " + std::to_string(line) + ")" : what), line_(line) {}

    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

// Violated preconditions: parameters out of range, caps exceeded,
// operations undefined on the given input.
class ValidationError : public Error {
public:
    explicit ValidationError(const std::string& what) : Error(what) {}
};

// Thrown when a caller-supplied cancellation hook interrupts a long
// computation.
class Cancelled : public Error {
public:
    Cancelled() : Error("computation cancelled") {}
};

} // namespace kgfca
