#pragma once

#include <stdexcept>
#include <string>

namespace isl {

// Bad configuration or dimension wiring (caller supplied impossible setup).
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

// API misuse detected at runtime (stale tape, empty input where forbidden, ...).
class UsageError : public std::runtime_error {
public:
    explicit UsageError(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed external data (dataset files, checkpoints).
class FormatError : public std::runtime_error {
public:
    explicit FormatError(const std::string& msg) : std::runtime_error(msg) {}
};

// Non-finite values where finite math is required; aborts the offending step.
class NumericError : public std::runtime_error {
public:
    explicit NumericError(const std::string& msg) : std::runtime_error(msg) {}
};

// Warning sink. Counts are exposed so tests can assert a warning fired.
void warn(const std::string& msg);
long warning_count();

}  // namespace isl
