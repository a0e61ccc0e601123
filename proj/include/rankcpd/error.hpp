#pragma once

#include <stdexcept>
#include <string>

namespace rankcpd {

// Base class for all library errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Invalid user-supplied argument (bad flag value, out-of-range parameter).
// CLI maps this to exit code 1.
class InvalidArgument : public Error {
public:
    using Error::Error;
};

// Malformed or unusable input data (CSV parse failures, non-finite values,
// dimension mismatches). CLI maps this to exit code 2.
class DataError : public Error {
public:
    using Error::Error;
};

// Numeric procedure failed to converge or produced an unusable result.
// CLI maps this to exit code 3.
class NumericError : public Error {
public:
    using Error::Error;
};

}  // namespace rankcpd
