#pragma once

#include <stdexcept>
#include <string>

namespace hypx {

/// Invalid or singular input: bad parameters, poles, nonterminating sums.
class DomainError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A relation that must hold by construction failed (e.g. a recurrence
/// produced a nonzero polynomial remainder). Indicates a broken invariant,
/// not bad user input.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Numeric summation did not meet the requested tail bound. Carries the
/// last partial sum (stringified) for diagnostics.
class ConvergenceError : public std::runtime_error {
public:
    ConvergenceError(const std::string& msg, std::string partial)
        : std::runtime_error(msg), partial_sum(std::move(partial)) {}
    std::string partial_sum;
};

}  // namespace hypx
