#pragma once

#include <stdexcept>
#include <string>

namespace fibfull {

/// Malformed or unsupported user input. The CLI maps this to exit code 1.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A mathematical invariant that must hold was violated. This always
/// indicates an engine bug (or a falsified theorem) and maps to exit code 2.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace fibfull
