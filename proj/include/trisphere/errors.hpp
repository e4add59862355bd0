#pragma once

#include <stdexcept>
#include <string>

namespace trisphere {

/// Base class for all domain errors raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// du x dv vanished where a tangent plane was required.
class DegenerateNormal : public Error {
 public:
  using Error::Error;
};

/// First fundamental form is singular (EG - F^2 too small).
class NonRegularPoint : public Error {
 public:
  using Error::Error;
};

/// ||p||^2 - 1 < -1, i.e. the patch passes through the origin.
class NegativeRadicand : public Error {
 public:
  using Error::Error;
};

/// The bisection interval does not bracket a sign change.
class BisectionFailure : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

}  // namespace trisphere
