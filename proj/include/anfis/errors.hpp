#pragma once

#include <stdexcept>
#include <string>

namespace anfis {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Invalid settings or model parameters (CLI exit code 2).
class ConfigError : public Error {
public:
    using Error::Error;
};

/// Malformed, insufficient, or inconsistent data, including shape
/// mismatches and bad input files (CLI exit code 3).
class DataError : public Error {
public:
    using Error::Error;
};

/// Non-finite values or failed numerical procedures (CLI exit code 4).
class NumericError : public Error {
public:
    using Error::Error;
};

} // namespace anfis
