#pragma once

// Error kinds shared by every module. The CLI maps them onto exit codes.

#include <stdexcept>
#include <string>

namespace abelsub {

/// Invalid parameters or malformed literals (exit code 2).
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input outside the mathematical domain of an operation (e.g. a rational
/// slope where an irrational one is required).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Index beyond what a finite description defines.
class RangeError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// A finite window is too short to determine the requested letters.
class BoundaryError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A search or enumeration hit its configured cap (exit code 3).
class ResourceError : public std::runtime_error {
 public:
  ResourceError(const std::string& what, bool partial = false)
      : std::runtime_error(what), partial_(partial) {}
  bool partial() const noexcept { return partial_; }

 private:
  bool partial_;
};

}  // namespace abelsub
