#pragma once

#include <stdexcept>
#include <string>

namespace acphase {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Operand shapes do not fit the operation.
class DimensionError : public Error {
public:
    using Error::Error;
};

/// A documented precondition of an operation was violated (off-shell momentum,
/// grid touching the line charge, non-AC field, ...).
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// Scenario / configuration problems; `key()` names the offending entry.
class ConfigError : public Error {
public:
    ConfigError(std::string key, const std::string& what)
        : Error(key.empty() ? what : key + ": " + what), key_(std::move(key)) {}
    const std::string& key() const noexcept { return key_; }

private:
    std::string key_;
};

}  // namespace acphase
