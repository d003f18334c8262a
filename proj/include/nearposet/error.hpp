#pragma once

#include <stdexcept>
#include <string>

namespace nearposet {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed order, unknown element names, bad frames or space files.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

// Sets or families from different posets mixed in one operation.
class InstanceMismatch : public Error {
 public:
  using Error::Error;
};

// An enumeration would exceed the configured size bound.
class BoundExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace nearposet
