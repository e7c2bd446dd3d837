#pragma once

#include <stdexcept>
#include <string>

namespace bikei {

// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed textual input. line/col are 1-based; 0 means unknown.
class ParseError : public Error {
public:
    ParseError(const std::string& msg, int line = 0, int col = 0)
        : Error(format(msg, line, col)), line_(line), col_(col) {}
    int line() const { return line_; }
    int col() const { return col_; }

private:
    static std::string format(const std::string& msg, int line, int col) {
        if (line <= 0) return msg;
        std::string s = "line " + std::to_string(line);
        if (col > 0) s += ", col " + std::to_string(col);
        return s + ": " + msg;
    }
    int line_;
    int col_;
};

// Constructor parameters violate a documented constraint.
class InvalidParameters : public Error {
public:
    using Error::Error;
};

// A table or matrix value breaks a structural invariant.
class InvalidTable : public Error {
public:
    using Error::Error;
};

// Internal consistency check failed; indicates a bug, not bad input.
class EngineBug : public Error {
public:
    using Error::Error;
};

} // namespace bikei
