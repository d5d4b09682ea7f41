#pragma once

#include <stdexcept>
#include <string>

namespace cqwl {

/// Input (file or DSL) could not be parsed. Message carries the line number.
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

/// An exhaustive search exceeded its configured budget. Distinct from a wrong
/// answer: callers can retry with a larger cap.
class BudgetExceededError : public std::runtime_error {
public:
    explicit BudgetExceededError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Precondition violation on an operation (bad tau, odd set size, ...).
class DomainError : public std::runtime_error {
public:
    explicit DomainError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace cqwl
