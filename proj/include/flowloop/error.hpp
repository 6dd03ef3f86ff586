#pragma once

#include <stdexcept>
#include <string>

namespace flowloop {

/// Bad user input: malformed braid, unmet precondition, out-of-range index.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An internal consistency check failed. Always indicates a bug, never bad input.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace flowloop
