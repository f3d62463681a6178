#pragma once

#include <stdexcept>
#include <string>

namespace scramble {

// Bad or inconsistent run configuration (unknown keys, empty grids, ...).
struct config_error : std::runtime_error {
    explicit config_error(const std::string& what) : std::runtime_error(what) {}
};

// A requested computation exceeds a configured dimension limit.
struct resource_limit_error : std::runtime_error {
    explicit resource_limit_error(const std::string& what) : std::runtime_error(what) {}
};

// An iterative method failed to converge.
struct numerical_error : std::runtime_error {
    explicit numerical_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace scramble
