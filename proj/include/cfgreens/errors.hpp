#pragma once

#include <stdexcept>
#include <string>

namespace cfgreens {

// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Argument outside the domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Grid variant the library does not implement.
class UnsupportedGridError : public DomainError {
 public:
  using DomainError::DomainError;
};

// Result magnitude does not fit a double. log_magnitude is ln|value|.
class OverflowError : public Error {
 public:
  OverflowError(const std::string& what, double log_magnitude)
      : Error(what), log_magnitude_(log_magnitude) {}
  double log_magnitude() const { return log_magnitude_; }

 private:
  double log_magnitude_;
};

// A computation could not reach its accuracy target.
class AccuracyError : public Error {
 public:
  AccuracyError(const std::string& what, double estimate)
      : Error(what), estimate_(estimate) {}
  double estimate() const { return estimate_; }

 private:
  double estimate_;
};

// Energy lies on (or numerically at) a bound-state pole of the Green's function.
class NearPoleError : public Error {
 public:
  using Error::Error;
};

// Local Coulomb solutions at an interval boundary are linearly dependent.
class MatchingError : public Error {
 public:
  MatchingError(const std::string& what, int interval)
      : Error(what), interval_(interval) {}
  int interval() const { return interval_; }

 private:
  int interval_;
};

// Malformed input file. line is 1-based, 0 when not applicable.
class FormatError : public Error {
 public:
  FormatError(const std::string& what, int line)
      : Error(line > 0 ? what + " (line " + std::to_string(line) + ")" : what),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

}  // namespace cfgreens
