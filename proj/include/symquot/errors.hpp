#pragma once

#include <stdexcept>
#include <string>

namespace symquot {

// Bad user input: malformed spec files, invalid model data, unusable query
// levels. Maps to CLI exit code 2.
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

// A reduction level that coincides with a critical value of the momentum map.
class CriticalLevelError : public ValidationError {
public:
    explicit CriticalLevelError(const std::string& what) : ValidationError(what) {}
};

// A fixed point in the zero level whose weights all share one sign; such a
// point is the entire level set and the blow-up bookkeeping does not apply.
class OneSidedWeightsError : public ValidationError {
public:
    explicit OneSidedWeightsError(const std::string& what) : ValidationError(what) {}
};

// The explicit two-generator ideal presentation exists only when all weights
// share one absolute value.
class UnequalWeightsError : public ValidationError {
public:
    explicit UnequalWeightsError(const std::string& what) : ValidationError(what) {}
};

// Two independent computation routes disagreed, or an internal invariant
// (nonnegativity, exactness) failed. Never a user error. Maps to CLI exit
// code 3.
class InconsistencyError : public std::logic_error {
public:
    explicit InconsistencyError(const std::string& what) : std::logic_error(what) {}
};

} // namespace symquot
