#pragma once

#include <stdexcept>
#include <string>

namespace eiscensus {

/// Raised when a requested computation exceeds a configured work budget.
class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when two counting engines disagree on the same input.
class EngineMismatchError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace eiscensus
