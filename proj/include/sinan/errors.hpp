// Error types shared across the library. The CLI maps these to exit codes:
// config/input errors -> 2, numeric failures -> 3.
#pragma once

#include <stdexcept>
#include <string>

namespace sinan {

// Invalid static configuration: bad graph spec, shape mismatch, missing file.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

// Invalid runtime input: unknown request type, malformed record, bad argument.
class InputError : public std::runtime_error {
public:
    explicit InputError(const std::string& msg) : std::runtime_error(msg) {}
};

// Numeric failure: diverged training loss, singular system with no fallback.
class NumericError : public std::runtime_error {
public:
    explicit NumericError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace sinan
