#pragma once

#include <stdexcept>
#include <string>

namespace bruhat {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or out-of-range input (type string, word, Cartan data).
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// A configured size guard was exceeded (orbit bits, reduced-word length...).
class GuardExceeded : public Error {
 public:
  using Error::Error;
};

/// A sampled point hit a measure-zero degeneracy (no Gaussian decomposition,
/// vanishing denominator). Randomized callers draw a fresh sample.
class Degenerate : public Error {
 public:
  using Error::Error;
};

}  // namespace bruhat
