#pragma once

#include <stdexcept>
#include <string>

namespace zne {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// malformed circuit text; line is 1-based
struct ParseError : Error {
    ParseError(const std::string& msg, int line_number)
        : Error("line " + std::to_string(line_number) + ": " + msg), line(line_number) {}
    int line;
};

// invalid experiment or CLI configuration (exit code 2)
struct ConfigError : Error {
    using Error::Error;
};

// a fit could not be performed or did not converge (exit code 3)
struct EstimationError : Error {
    using Error::Error;
};

}  // namespace zne
