#pragma once

#include <stdexcept>
#include <string>

namespace qeuler {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument violates a precondition of the operation (bad prime, |q| >= 1, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// 1 + xi q^{h+j} vanished for the reported j.
class DegenerateDenominator : public DomainError {
 public:
  explicit DegenerateDenominator(long j)
      : DomainError("denominator 1 + xi*q^(h+j) vanishes at j = " + std::to_string(j)), j_(j) {}
  long j() const noexcept { return j_; }

 private:
  long j_;
};

/// A truncated p-adic computation cannot certify the requested precision.
class PrecisionError : public Error {
 public:
  using Error::Error;
};

}  // namespace qeuler
