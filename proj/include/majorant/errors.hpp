#pragma once

#include <stdexcept>
#include <string>

namespace majorant {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or out-of-range arguments (empty lists, NaN, bad indices, bad JSON).
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// A prefix-sum majorization precondition failed.
class MajorizationViolation : public Error {
 public:
  using Error::Error;
};

/// Totals that must agree (traces, sums of diagonals) do not.
class TraceMismatch : public Error {
 public:
  using Error::Error;
};

/// Two spectra or step functions are not matched within the requested epsilon.
class DistributionMismatch : public Error {
 public:
  using Error::Error;
};

}  // namespace majorant
