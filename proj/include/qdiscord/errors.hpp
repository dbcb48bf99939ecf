#pragma once

#include <stdexcept>
#include <string>

namespace qdiscord {

/// Malformed config text or a parameter that violates its constraint.
/// `key()` names the offending key when there is one.
class ConfigError : public std::runtime_error {
public:
    ConfigError(std::string key, const std::string& what)
        : std::runtime_error(key.empty() ? what : key + ": " + what), key_(std::move(key)) {}

    const std::string& key() const noexcept { return key_; }

private:
    std::string key_;
};

/// Argument outside the domain of a numerical routine.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// A numerical procedure failed to meet its accuracy or bracketing target.
class ConvergenceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace qdiscord
