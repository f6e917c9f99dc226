#pragma once

#include <stdexcept>
#include <string>

namespace coldsim {

/// Bad user input: malformed config documents, unknown names, invalid values.
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

/// Filesystem and serialization failures.
struct IoError : std::runtime_error {
    explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

/// An operation was called in a state its contract forbids.
struct PreconditionError : std::logic_error {
    explicit PreconditionError(const std::string& what) : std::logic_error(what) {}
};

/// A cache admission that cannot fit even after eviction.
struct CapacityError : std::runtime_error {
    explicit CapacityError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace coldsim
