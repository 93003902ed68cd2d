#pragma once

#include <stdexcept>
#include <string>

namespace tangle {

// Malformed text input. Carries the 1-based line and the offending token so
// the CLI can report both.
class ParseError : public std::runtime_error {
public:
    ParseError(int line, std::string token, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ", token '" + token +
                             "': " + what),
          line_(line),
          token_(std::move(token)) {}

    int line() const { return line_; }
    const std::string& token() const { return token_; }

private:
    int line_;
    std::string token_;
};

// An algorithmic precondition does not hold (e.g. the residual subtanglegram
// of an insertion query is not planar).
class PreconditionError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A brute-force routine refused to run because the instance exceeds its size
// guard.
class SizeGuardError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace tangle
