#pragma once

#include <stdexcept>
#include <string>

namespace podkit {

/// Precondition violation on an operation argument.
class InvalidArgument : public std::invalid_argument {
 public:
  explicit InvalidArgument(const std::string& what) : std::invalid_argument(what) {}
};

/// A numerical procedure failed (eigensolver breakdown, overflow, singular solve).
class NumericFailure : public std::runtime_error {
 public:
  explicit NumericFailure(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace podkit
