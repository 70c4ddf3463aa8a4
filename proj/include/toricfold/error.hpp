#pragma once

#include <stdexcept>
#include <string>

namespace toricfold {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised by the checked 64-bit integer path instead of wrapping.
class OverflowError : public Error {
 public:
  using Error::Error;
};

// A structural invariant that the mathematics guarantees was violated.
// Seeing one of these means there is a bug upstream.
class IntegrityError : public Error {
 public:
  using Error::Error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

}  // namespace toricfold
