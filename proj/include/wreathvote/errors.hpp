#pragma once

#include <stdexcept>
#include <string>

namespace wreathvote {

// Malformed or inconsistent caller input: bad text, mismatched degrees,
// vectors of the wrong length, violated operation preconditions.
struct DomainError : std::runtime_error {
  explicit DomainError(const std::string& msg) : std::runtime_error(msg) {}
};

// The requested computation exceeds the configured desk-scale limits.
struct LimitError : std::runtime_error {
  explicit LimitError(const std::string& msg) : std::runtime_error(msg) {}
};

// A mathematical invariant failed. Indicates a bug, never bad input.
struct InternalError : std::logic_error {
  explicit InternalError(const std::string& msg) : std::logic_error(msg) {}
};

}  // namespace wreathvote
