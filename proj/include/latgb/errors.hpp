#pragma once

#include <stdexcept>
#include <string>

namespace latgb {

// Input text could not be parsed. Positions are 1-based.
class parse_error : public std::runtime_error {
public:
    parse_error(const std::string& what, int line, int column)
        : std::runtime_error(what + " (line " + std::to_string(line) +
                             ", column " + std::to_string(column) + ")"),
          line_(line),
          column_(column) {}

    int line() const noexcept { return line_; }
    int column() const noexcept { return column_; }

private:
    int line_;
    int column_;
};

// An operation was invoked outside its contract (missing basis flags,
// non-free quotient, arity mismatch between ring and argument, ...).
class precondition_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A quotient ring that is free but of infinite rank; callers that need a
// finite coordinate system must treat this separately from "not free".
class infinite_rank_error : public precondition_error {
public:
    using precondition_error::precondition_error;
};

// A configured resource bound (pair limit, enumeration guard) was exceeded.
class resource_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace latgb
