#pragma once

#include <stdexcept>
#include <string>

namespace tileforge {

// Base class for every recoverable failure raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A size or search budget was exhausted. Never means "no solution".
class ResourceError : public Error {
 public:
  using Error::Error;
};

}  // namespace tileforge
