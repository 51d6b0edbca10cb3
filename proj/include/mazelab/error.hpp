#pragma once

#include <stdexcept>
#include <string>

namespace mazelab {

// Base class for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed or invalid input text (grammar or validation failure).
// line/col locate the error when known (-1 otherwise): grammar errors
// use 1-based file coordinates, grid validation errors 1-based
// character-grid slot coordinates.
struct ParseError : Error {
    int line = -1;
    int col = -1;

    explicit ParseError(const std::string& msg) : Error(msg) {}
    ParseError(const std::string& msg, int line_, int col_)
        : Error(msg + " at (" + std::to_string(line_) + "," + std::to_string(col_) + ")"),
          line(line_),
          col(col_) {}
};

// A request exceeded a configured resource limit (e.g. enumeration size).
struct LimitError : Error {
    explicit LimitError(const std::string& msg) : Error(msg) {}
};

// Caller passed inconsistent or unusable arguments.
struct UsageError : Error {
    explicit UsageError(const std::string& msg) : Error(msg) {}
};

}  // namespace mazelab
