#pragma once

#include <stdexcept>
#include <string>

namespace sitwist {

// Base for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed text or JSON input.
class ParseError : public Error {
 public:
  using Error::Error;
};

// A precondition on the arguments does not hold (bad index, strand mismatch,
// non-pure input where a pure braid is required, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

}  // namespace sitwist
