#pragma once

#include <stdexcept>
#include <string>

namespace nabc {

/// Malformed input: invalid tables, broken axioms, unresolvable references.
class InvalidInput : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A configured size or search bound would be exceeded.
class BoundExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An internal self-check failed. Seeing this means a bug, not bad input.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace nabc
