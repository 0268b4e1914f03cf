#pragma once

#include <stdexcept>
#include <string>

namespace catmix {

/// Requested computation exceeds the exact-arithmetic capacity limits.
struct capacity_error : std::runtime_error {
    explicit capacity_error(const std::string& what) : std::runtime_error(what) {}
};

/// A structural invariant that the library guarantees was found violated.
struct invariant_error : std::runtime_error {
    explicit invariant_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace catmix
