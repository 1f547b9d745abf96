#pragma once

#include <stdexcept>
#include <string>

namespace circexp {

/// Numerical failure with diagnostic context (as opposed to a precondition
/// violation, which is reported via std::domain_error).
class numeric_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when a measure is too concentrated for the numeric OPUC
/// construction; carries the degree at which the Toeplitz system broke down.
class concentration_error : public numeric_error {
 public:
  concentration_error(const std::string& msg, int degree)
      : numeric_error(msg), degree_(degree) {}
  int degree() const noexcept { return degree_; }

 private:
  int degree_;
};

/// Raised when an adaptive integration cannot continue; carries the time at
/// which the step size underflowed.
class propagation_error : public numeric_error {
 public:
  propagation_error(const std::string& msg, double t)
      : numeric_error(msg), time_(t) {}
  double time() const noexcept { return time_; }

 private:
  double time_;
};

}  // namespace circexp
