#pragma once

#include <stdexcept>
#include <string>

namespace gradvar {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or out-of-contract input (bad sizes, bad indices, bad parameters).
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// A connected component that needs boundary data has none.
class UnanchoredComponent : public Error {
 public:
  using Error::Error;
};

/// An invariant that the library guarantees was found broken.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace gradvar
