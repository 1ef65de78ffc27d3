#pragma once

#include <stdexcept>
#include <string>

namespace eszb {

// A requested computation exceeds a configured table or budget limit.
// Messages name the limit that was hit and, where possible, the size that
// would be required.
struct CapacityError : std::runtime_error {
  explicit CapacityError(const std::string& what) : std::runtime_error(what) {}
};

// An exact integer computation would wrap. We abort instead of wrapping.
struct OverflowError : std::runtime_error {
  explicit OverflowError(const std::string& what) : std::runtime_error(what) {}
};

// A height or census operation was asked to evaluate at a marked (stacky)
// point, where the quantity degenerates.
struct StackyPointError : std::domain_error {
  explicit StackyPointError(const std::string& what) : std::domain_error(what) {}
};

}  // namespace eszb
