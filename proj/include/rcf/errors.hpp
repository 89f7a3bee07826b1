#pragma once

#include <stdexcept>
#include <string>

namespace rcf {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A series, product or continued fraction did not meet its tail bound.
class NonConvergent : public Error {
 public:
  using Error::Error;
};

/// The working precision cannot resolve the requested quantity; retry with more bits.
class PrecisionExhausted : public Error {
 public:
  using Error::Error;
};

/// Argument outside the mathematical domain (negative radicand, k >= 1, q outside (0,1), ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Newton iteration left its bracket or failed to settle.
class Diverged : public Error {
 public:
  using Error::Error;
};

/// No polynomial root lies close to the independently computed target.
class NoMatchingRoot : public Error {
 public:
  using Error::Error;
};

/// Two routes of a closed-form chain disagree beyond tolerance.
class ChainInconsistent : public Error {
 public:
  using Error::Error;
};

class UnknownCheck : public Error {
 public:
  using Error::Error;
};

/// Catalog violates its own invariants (duplicate id, empty grid).
class CatalogError : public Error {
 public:
  using Error::Error;
};

}  // namespace rcf
