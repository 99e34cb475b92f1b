#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace detkit {

/// Base class for detkit run-time failures (I/O, malformed input, bad data).
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Failure while parsing a text document. Carries the 1-based source line.
class ParseError : public Error {
public:
    ParseError(const std::string& message, std::size_t line)
        : Error("line " + std::to_string(line) + ": " + message), line_(line) {}

    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

}  // namespace detkit
