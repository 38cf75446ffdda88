#pragma once

#include <stdexcept>
#include <string>

namespace ikeda {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Caller supplied something outside an operation's domain.
struct InvalidInput : Error {
  using Error::Error;
};

// Mathematically meaningful input that this library deliberately does not handle.
struct Unsupported : Error {
  using Error::Error;
};

// A bounded search ran out before reaching a decision.
struct Inconclusive : Error {
  using Error::Error;
};

// An internal consistency check failed.
struct InternalError : Error {
  using Error::Error;
};

}  // namespace ikeda
