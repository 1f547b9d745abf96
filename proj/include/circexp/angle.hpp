#pragma once

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace circexp {

inline constexpr double two_pi = 2.0 * std::numbers::pi;

/// Maps an angle in radians to the canonical range (-pi, pi].
/// Idempotent, and canonicalize(x + 2*pi*k) == canonicalize(x) for integer k.
inline double canonicalize(double theta) {
  if (!std::isfinite(theta)) {
    throw std::domain_error("canonicalize: non-finite angle");
  }
  double r = std::remainder(theta, two_pi);  // in [-pi, pi]
  if (r <= -std::numbers::pi) {
    r += two_pi;
  }
  return r;
}

/// An angle in radians, stored canonically in (-pi, pi].
class Angle {
 public:
  Angle() = default;
  explicit Angle(double radians) : rad_(canonicalize(radians)) {}

  static Angle from_degrees(double deg) {
    return Angle(deg * std::numbers::pi / 180.0);
  }

  double radians() const noexcept { return rad_; }
  double degrees() const noexcept { return rad_ * 180.0 / std::numbers::pi; }

  friend bool operator==(Angle a, Angle b) { return a.rad_ == b.rad_; }

 private:
  double rad_ = 0.0;
};

/// Principal angular difference a - b, in (-pi, pi].
inline double angular_difference(double a, double b) {
  return canonicalize(a - b);
}

}  // namespace circexp
