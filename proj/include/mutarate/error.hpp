#pragma once

#include <stdexcept>
#include <string>

namespace mutarate {

// Exception families map onto CLI exit codes (see tools/mutarate.cpp).
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DataError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class NumericError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Raised when a distance correction leaves the domain of its logarithm.
class SaturationError : public NumericError {
public:
    using NumericError::NumericError;
};

}  // namespace mutarate
