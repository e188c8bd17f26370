#pragma once

#include <stdexcept>
#include <string>

namespace sepdepth {

/// Malformed or out-of-contract input (bad edge endpoints, bad parameters,
/// unparsable documents). CLI exit code 1.
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Operation applied outside its mathematical domain (e.g. top separators of
/// a complete graph). CLI exit code 1.
struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Refusal because an instance exceeds a configured budget, or a resource cap
/// was hit mid-computation. CLI exit code 2.
struct BudgetError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Parse failure with the offending 1-based line number.
struct ParseError : InputError {
    ParseError(const std::string& msg, int line_number)
        : InputError("line " + std::to_string(line_number) + ": " + msg), line(line_number) {}
    int line;
};

} // namespace sepdepth
