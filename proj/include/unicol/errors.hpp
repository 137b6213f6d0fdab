#pragma once

#include <stdexcept>
#include <string>

namespace unicol {

// Exit-code mapping used by the CLI: 2 = config, 3 = domain, 4 = precision.
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& m) : std::runtime_error(m) {}
};

struct DomainError : std::runtime_error {
    explicit DomainError(const std::string& m) : std::runtime_error(m) {}
};

struct PrecisionError : std::runtime_error {
    explicit PrecisionError(const std::string& m) : std::runtime_error(m) {}
};

} // namespace unicol
