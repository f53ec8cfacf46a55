#pragma once

#include <stdexcept>
#include <string>

namespace ringrep {

// Workbench-wide exception. The C API maps subclasses onto status codes.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Invalid argument / precondition violation (zero denominator, composite p, ...).
class ArgumentError : public Error {
public:
    using Error::Error;
};

// Two values from different rings met in one operation.
class RingMismatchError : public Error {
public:
    using Error::Error;
};

// Text did not match the element/word/file grammar. Column is 0-based.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t column)
        : Error(what + " (column " + std::to_string(column) + ")"), column_(column) {}
    std::size_t column() const { return column_; }

private:
    std::size_t column_;
};

// Requested construction exists but is not supported at this scale/ring.
class UnsupportedError : public Error {
public:
    using Error::Error;
};

// A bounded search ran out of room (witness searches).
class SearchExhaustedError : public Error {
public:
    using Error::Error;
};

} // namespace ringrep
