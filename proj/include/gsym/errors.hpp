#pragma once

#include <stdexcept>
#include <string>

namespace gsym {

/// Mismatched n or r between operands.
struct DimensionError : std::invalid_argument {
    explicit DimensionError(const std::string& what) : std::invalid_argument(what) {}
};

/// A desk-scale guard refused the computation; pass allow_big to lift it.
struct ScaleGuardError : std::runtime_error {
    explicit ScaleGuardError(const std::string& what) : std::runtime_error(what) {}
};

/// An exact identity failed to hold (non-rational dual value, non-integer
/// multiplicity, ...). Indicates a bug, never bad user input.
struct ConsistencyError : std::runtime_error {
    explicit ConsistencyError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace gsym
