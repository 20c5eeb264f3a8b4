#pragma once

#include <stdexcept>
#include <string>

namespace rislink {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Degenerate or invalid geometry: zero-length vectors, coincident points,
// panels smaller than one element, satellites below the horizon.
struct GeometryError : Error {
  using Error::Error;
};

// Rejected run configuration; the message names the offending key path.
struct ConfigError : Error {
  using Error::Error;
};

struct IoError : Error {
  using Error::Error;
};

}  // namespace rislink
