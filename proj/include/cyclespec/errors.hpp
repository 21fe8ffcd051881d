#pragma once

#include <stdexcept>
#include <string>

namespace cyclespec {

/// Bad input: violated precondition, malformed data, out-of-range argument.
/// CLI maps this (and parse errors) to exit code 2.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Structurally valid request that exceeds a documented capability bound
/// (cache caps, dimension caps, brute-force caps).  CLI maps this to exit
/// code 3.  The message names the bound that was hit.
class CapabilityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace cyclespec
