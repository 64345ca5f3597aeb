#pragma once

#include <stdexcept>
#include <string>

namespace scholimpact {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Bad or missing configuration (CLI exit code 2).
class ConfigError : public Error {
public:
    using Error::Error;
};

// Malformed input data: catalog lines, CSV rows, fixture files.
class LoadError : public Error {
public:
    using Error::Error;
};

// A stage was started without the artifacts it needs (CLI exit code 3).
class PrerequisiteError : public Error {
public:
    using Error::Error;
};

// Search or reader-count service failure (CLI exit code 4).
class BackendError : public Error {
public:
    using Error::Error;
};

// Statistic requested on inputs where it is undefined (n too small, etc.).
class StatsError : public Error {
public:
    using Error::Error;
};

// Rank correlation on a constant vector; rendered blank in tables.
class UndefinedCorrelation : public StatsError {
public:
    using StatsError::StatsError;
};

} // namespace scholimpact
