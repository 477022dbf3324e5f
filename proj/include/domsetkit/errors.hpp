#pragma once

#include <stdexcept>
#include <string>

namespace domsetkit {

// Malformed input data or bad arguments. CLI exit code 2.
struct InputError : std::runtime_error {
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// A structural contract does not hold (invalid decomposition, failed
// verification, infeasible constraint). CLI exit code 3.
struct ValidationError : std::runtime_error {
  explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

// Instance exceeds a hard resource cap. CLI exit code 4.
struct ResourceError : std::runtime_error {
  explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

// Requested width bound cannot be met by the direct constructors.
struct WidthExceededError : ValidationError {
  int bound;
  WidthExceededError(int bound_, const std::string& what)
      : ValidationError(what), bound(bound_) {}
};

}  // namespace domsetkit
