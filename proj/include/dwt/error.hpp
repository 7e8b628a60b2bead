#pragma once

#include <stdexcept>
#include <string>

namespace dwt {

/// Input violates a precondition or a type invariant.
class ValidationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A numerically well-posed request that cannot be evaluated: buckling,
/// singularities, bracketing failures.
class NumericError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

namespace detail {

inline void require(bool ok, const std::string& what) {
    if (!ok) throw ValidationError(what);
}

}  // namespace detail
}  // namespace dwt
