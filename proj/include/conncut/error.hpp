#pragma once

#include <stdexcept>
#include <string>

namespace conncut {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed input text; line is 1-based, 0 if not line-specific.
struct ParseError : Error {
    int line;
    ParseError(int line_, const std::string& msg)
        : Error(line_ > 0 ? "line " + std::to_string(line_) + ": " + msg : msg), line(line_) {}
};

/// Bad arguments to an operation (usage-class error).
struct InvalidArgument : Error {
    using Error::Error;
};

/// Enumeration size cap exceeded on a brute-force oracle.
struct LimitExceeded : Error {
    using Error::Error;
};

/// An oracle or lattice instantiation broke its contract; indicates a bug.
struct ContractViolation : Error {
    using Error::Error;
};

}  // namespace conncut
