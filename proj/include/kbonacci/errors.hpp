#pragma once

#include <stdexcept>
#include <string>

namespace kbonacci {

/// Invalid argument for an operation (k < 1, n < 0 where not allowed, ...).
class ParameterError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Argument inside the parameter domain but outside the operation's legal range.
class RangeError : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

/// Exhaustive enumeration requested beyond the configured cap.
class CapError : public std::length_error {
public:
    using std::length_error::length_error;
};

/// An internal invariant failed. Signals a defect or an inconsistent input object.
class ConsistencyError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace kbonacci
