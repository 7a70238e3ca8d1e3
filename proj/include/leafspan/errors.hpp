#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace leafspan {

// Input text could not be decoded. `offset` is the byte position of the
// offending character within the input line.
struct parse_error : std::runtime_error {
    parse_error(const std::string& what, std::size_t offset_)
        : std::runtime_error(what), offset(offset_) {}
    std::size_t offset;
};

// Operation would exceed the 64-vertex representation cap.
struct capacity_error : std::length_error {
    using std::length_error::length_error;
};

// Argument violates a precondition (empty set, disconnected input, ...).
struct domain_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Exact computation was requested beyond its configured size budget.
struct budget_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace leafspan
