#pragma once

#include <stdexcept>
#include <string>

namespace lpst {

// Input text could not be parsed.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An operation was called on input that violates its contract.
struct PreconditionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Brute-force enumeration refused an instance above its size cap.
struct CapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace lpst
