#pragma once

// Error types shared by every engine. The CLI maps them onto exit codes:
// ResourceError and OverflowError -> 3, everything else from std::exception -> 1 or 2.

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sumtable {

/// Checked integer arithmetic detected a coefficient that does not fit in 64 bits.
class OverflowError : public std::overflow_error {
public:
    OverflowError(const std::string& what, std::size_t exponent)
        : std::overflow_error(what + " (at exponent " + std::to_string(exponent) + ")"),
          exponent_(exponent) {}

    std::size_t exponent() const noexcept { return exponent_; }

private:
    std::size_t exponent_;
};

/// Exact division left a nonzero remainder.
class NotDivisibleError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// A configured limit (cell cap, candidate count, time budget) was hit.
class ResourceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class CapExceededError : public ResourceError {
public:
    using ResourceError::ResourceError;
};

class TimeBudgetExceededError : public ResourceError {
public:
    using ResourceError::ResourceError;
};

/// An internal self-check failed. Always a bug.
class InvariantViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace sumtable
