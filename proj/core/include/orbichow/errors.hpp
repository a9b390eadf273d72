#pragma once

#include <stdexcept>
#include <string>

namespace orbichow {

/// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Malformed or out-of-contract input (bad JSON, invalid group spec, ...).
/// The CLI maps this to exit code 2.
struct InputError : Error {
  using Error::Error;
};

/// A configured size bound was exceeded (group order, table size, ...).
struct BoundError : InputError {
  using InputError::InputError;
};

/// The coarse pushforward degree of a twisted line bundle is not an
/// integer; signals inconsistent monodromy data.
struct NonIntegralDegree : Error {
  using Error::Error;
};

}  // namespace orbichow
