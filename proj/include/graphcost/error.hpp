#pragma once

#include <stdexcept>
#include <string>

namespace graphcost {

/// Input or scenario data violates an invariant.
class ValidationError : public std::invalid_argument {
public:
    explicit ValidationError(const std::string& what) : std::invalid_argument(what) {}
};

/// A numeric procedure has no answer on its domain (e.g. IRR with no root).
class NumericError : public std::runtime_error {
public:
    explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

/// Text input could not be parsed. `line` is 1-based, 0 when unknown.
class ParseError : public ValidationError {
public:
    ParseError(int line, const std::string& what)
        : ValidationError("line " + std::to_string(line) + ": " + what), line_(line) {}

    int line() const noexcept { return line_; }

private:
    int line_;
};

}  // namespace graphcost
