#pragma once

#include <stdexcept>
#include <string>

namespace fluxladder {

// Invalid configuration or parameters; the CLI maps this to exit code 1.
struct ConfigError : std::invalid_argument {
    explicit ConfigError(const std::string& what) : std::invalid_argument(what) {}
};

// Numerical failure (solver breakdown, step-size violation, ...); exit code 2.
struct NumericError : std::runtime_error {
    explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace fluxladder
