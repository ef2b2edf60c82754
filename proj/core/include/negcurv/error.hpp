#pragma once

#include <stdexcept>
#include <string>

namespace negcurv {

/// Raised when an argument violates an operation's preconditions
/// (bad index, dimension mismatch, malformed file, infeasible request).
class InvalidInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Raised when a blackbox function returns a non-finite value.
class EvaluationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace negcurv
