#pragma once

#include <stdexcept>
#include <string>

namespace catanrl {

// Thrown by apply() when the action is not legal in the given state.
// Signals a caller bug; never silently ignored.
struct IllegalAction : std::logic_error {
    explicit IllegalAction(const std::string& what) : std::logic_error(what) {}
};

// Thrown when decoding a flat action index that maps to no action
// (empty cell, wrong cell type, or compatibility padding slot).
struct InvalidIndex : std::logic_error {
    explicit InvalidIndex(const std::string& what) : std::logic_error(what) {}
};

// Thrown by resolve_discard when the keep multiset is not a sub-multiset
// of the hand.
struct KeepNotInHand : std::logic_error {
    explicit KeepNotInHand(const std::string& what) : std::logic_error(what) {}
};

// Thrown when building a policy distribution from a mask with no set bits.
struct EmptyMask : std::logic_error {
    explicit EmptyMask(const std::string& what) : std::logic_error(what) {}
};

// Thrown when tensor shapes do not match the network configuration.
struct ShapeMismatch : std::logic_error {
    explicit ShapeMismatch(const std::string& what) : std::logic_error(what) {}
};

// Configuration file / key validation failure.
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace catanrl
