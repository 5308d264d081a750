#pragma once

#include <stdexcept>
#include <string>

namespace sdw {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// malformed input text; line numbers are 1-based, 0 when unknown
struct ParseError : Error {
    int line;
    ParseError(int line_, const std::string& what_)
        : Error(line_ > 0 ? "line " + std::to_string(line_) + ": " + what_ : what_), line(line_) {}
};

// an enumeration or table would exceed a configured cap
struct CapExceeded : Error {
    using Error::Error;
};

// a distribution fails an exactness check, i.e. it cannot belong to a binary code
struct InconsistentDistribution : Error {
    using Error::Error;
};

// arguments outside the documented domain of an operation
struct DomainError : Error {
    using Error::Error;
};

// an identity that must hold internally failed; a bug or a misused input object
struct ConsistencyError : Error {
    using Error::Error;
};

}  // namespace sdw
