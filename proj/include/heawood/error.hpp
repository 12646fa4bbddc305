#pragma once

#include <stdexcept>
#include <string>

namespace heawood {

/// Raised when an argument violates an operation's precondition.
class InputError : public std::invalid_argument {
 public:
  explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

/// Raised for malformed textual input (permutations, edge lists).
class ParseError : public InputError {
 public:
  explicit ParseError(const std::string& what) : InputError(what) {}
};

/// Raised when a computation would exceed a configured size bound.
class ResourceError : public std::runtime_error {
 public:
  explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace heawood
