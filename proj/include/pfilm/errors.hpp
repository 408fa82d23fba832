#pragma once

#include <stdexcept>
#include <string>

#include "pfilm/types.hpp"

namespace pfilm {

/// Base class for numerical failures (as opposed to invalid input, which
/// throws std::invalid_argument / std::domain_error).
class NumericsError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class QuadratureError : public NumericsError {
public:
  QuadratureError(const std::string& msg, Complex partial, double err_estimate)
      : NumericsError(msg), partial_value(partial), error_estimate(err_estimate) {}
  Complex partial_value;
  double error_estimate;
};

class SeriesError : public NumericsError {
public:
  using NumericsError::NumericsError;
};

class RootError : public NumericsError {
public:
  RootError(const std::string& msg, Complex last)
      : NumericsError(msg), last_iterate(last) {}
  Complex last_iterate;
};

/// Phase-continuation failure: grid too coarse (step >= pi) or g vanished.
class BranchError : public NumericsError {
public:
  using NumericsError::NumericsError;
};

/// The dispersion function has no discrete zero at this (Omega, eps);
/// carries the winding number that triggered the diagnosis.
class NoDiscreteZero : public NumericsError {
public:
  NoDiscreteZero(const std::string& msg, double wind)
      : NumericsError(msg), winding(wind) {}
  double winding;
};

class OpticsError : public NumericsError {
public:
  using NumericsError::NumericsError;
};

class ResonanceError : public NumericsError {
public:
  using NumericsError::NumericsError;
};

}  // namespace pfilm
