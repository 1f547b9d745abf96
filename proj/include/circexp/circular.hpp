#pragma once

#include <complex>
#include <functional>
#include <span>
#include <vector>

#include "circexp/angle.hpp"
#include "circexp/rng.hpp"

namespace circexp {

using Complex = std::complex<double>;

/// Wrapped normal density parameters: mean direction and the variance-like
/// spread sigma^2 (rad^2) of the underlying normal before wrapping.
struct WrappedNormalParams {
  Angle mu;
  double sigma2 = 1.0;
};

/// Von Mises density parameters: mean direction and concentration kappa.
struct VonMisesParams {
  Angle mu;
  double kappa = 1.0;
};

/// Characteristic sequence phi_n = E[exp(i n lambda)] of a circular density.
/// phi_0 == 1 and phi_{-n} == conj(phi_n) hold structurally: the stored
/// mapping is only ever queried for n >= 1.
class CharacteristicSequence {
 public:
  enum class Provenance { AnalyticWnd, AnalyticVmd, Empirical, Custom };

  static CharacteristicSequence wrapped_normal(const WrappedNormalParams& p);
  static CharacteristicSequence von_mises(const VonMisesParams& p);
  static CharacteristicSequence custom(std::function<Complex(long)> positive_n,
                                       Provenance tag = Provenance::Custom);

  Complex operator()(long n) const;
  Provenance provenance() const noexcept { return provenance_; }

 private:
  CharacteristicSequence(std::function<Complex(long)> f, Provenance tag)
      : positive_n_(std::move(f)), provenance_(tag) {}

  std::function<Complex(long)> positive_n_;
  Provenance provenance_;
};

/// Circular mean direction and standard deviation, with the first
/// trigonometric moment they derive from.
struct CircularSummary {
  Angle mean_direction;
  double circular_std = 0.0;  // radians
  Complex phi1;
};

/// Empirical circular mean/std from samples. Throws std::domain_error on an
/// empty list and numeric_error when |phi1| vanishes (uniform-like data).
CircularSummary circular_mean_std(std::span<const Angle> samples);

/// Empirical characteristic sequence from samples, exact conjugate symmetry.
CharacteristicSequence empirical_char(std::span<const Angle> samples,
                                      int n_max);

double wnd_pdf(Angle theta, const WrappedNormalParams& p);
Complex wnd_char(long n, const WrappedNormalParams& p);
double vmd_pdf(Angle theta, const VonMisesParams& p);
Complex vmd_char(long n, const VonMisesParams& p);

/// Wrapped-normal sampler: canonicalize(mu + sigma * xi'), xi' ~ N(0,1),
/// one substream per sample.
std::vector<Angle> sample_wnd(RngStream rng, const WrappedNormalParams& p,
                              std::size_t count);

/// Von Mises sampler (Best-Fisher rejection with a wrapped-Cauchy envelope);
/// kappa = 0 falls back to the uniform density on the circle.
std::vector<Angle> sample_vmd(RngStream rng, const VonMisesParams& p,
                              std::size_t count);

/// Wrapped-normal fit to a target characteristic sequence: mu from arg phi_1,
/// sigma^2 by scalar minimization of sum_{n=1..n_fit} |phi_n - wnd phi_n|^2.
/// Throws numeric_error when |phi_1| is 0 or 1 (degenerate target).
WrappedNormalParams fit_wnd_to_char(const CharacteristicSequence& target,
                                    int n_fit = 20);

void validate(const WrappedNormalParams& p);
void validate(const VonMisesParams& p);

}  // namespace circexp
