#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>

namespace circexp {

namespace detail {
// splitmix64 finalizer; used both as a hash and as the generator step.
inline std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}
}  // namespace detail

/// Counter-based substream generator. Every stochastic operation takes an
/// explicit (seed, stream) pair and derives one independent substream per
/// sample index, so parallel and serial runs produce identical draws.
class SubstreamRng {
 public:
  SubstreamRng(std::uint64_t seed, std::uint64_t stream, std::uint64_t index) {
    std::uint64_t h = detail::mix64(seed + 0x9e3779b97f4a7c15ull);
    h = detail::mix64(h ^ (stream + 0xbf58476d1ce4e5b9ull));
    state_ = detail::mix64(h ^ (index + 0x94d049bb133111ebull));
    if (state_ == 0) state_ = 0x6a09e667f3bcc909ull;
  }

  std::uint64_t next_u64() {
    state_ += 0x9e3779b97f4a7c15ull;
    return detail::mix64(state_);
  }

  /// Uniform on (0, 1]; never returns 0, so log(u) is safe.
  double uniform01() {
    return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
  }

  /// Uniform on [lo, hi).
  double uniform(double lo, double hi) {
    double u = static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * u;
  }

  /// Standard normal via Box-Muller (second value cached).
  double standard_normal() {
    if (have_cached_) {
      have_cached_ = false;
      return cached_;
    }
    double u1 = uniform01();
    double u2 = uniform01();
    double r = std::sqrt(-2.0 * std::log(u1));
    double t = 2.0 * std::numbers::pi * u2;
    cached_ = r * std::sin(t);
    have_cached_ = true;
    return r * std::cos(t);
  }

 private:
  std::uint64_t state_;
  double cached_ = 0.0;
  bool have_cached_ = false;
};

/// Handle naming one logical stream of a seeded experiment; substreams are
/// obtained per sample index.
struct RngStream {
  std::uint64_t seed = 0;
  std::uint64_t stream = 0;

  SubstreamRng at(std::uint64_t index) const {
    return SubstreamRng(seed, stream, index);
  }
};

}  // namespace circexp
