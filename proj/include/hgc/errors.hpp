#pragma once

#include <stdexcept>
#include <string>

namespace hgc {

/// Precondition on an argument was violated (bad permutation, missing birth time, ...).
class invalid_input : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// An exhaustive routine would exceed its configured work budget.
/// Oracles never fall back to sampling; they throw this instead.
class budget_exceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A numeric quantity left the representable range.
class numeric_range_error : public std::range_error {
public:
    using std::range_error::range_error;
};

/// A run produced output that breaks a structural guarantee of the algorithm.
class invariant_violation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Malformed text input. `line` is 1-based, 0 when not tied to a line.
class parse_error : public std::runtime_error {
public:
    parse_error(const std::string& what, std::size_t line)
        : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what),
          line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

} // namespace hgc
