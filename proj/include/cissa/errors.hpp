#ifndef CISSA_ERRORS_HPP
#define CISSA_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace cissa {

/// A parameter or precondition violation (bad window length, index out of
/// range, inconsistent dimensions). Maps to CLI exit code 2.
class ParameterError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Malformed or unusable input data (parse failures, non-finite samples,
/// unsupported encodings). Maps to CLI exit code 3.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A numeric consistency failure detected at run time (broken symmetry,
/// degenerate spectrum, failed model fit). Maps to CLI exit code 4.
class NumericError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace cissa

#endif
