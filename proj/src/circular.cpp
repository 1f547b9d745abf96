#include "circexp/circular.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <numbers>
#include <stdexcept>

#include "circexp/errors.hpp"
#include "circexp/special.hpp"

namespace circexp {

namespace {
constexpr double kPi = std::numbers::pi;
}

void validate(const WrappedNormalParams& p) {
  if (!(p.sigma2 > 0.0) || !std::isfinite(p.sigma2)) {
    throw std::domain_error("wrapped normal: sigma2 must be positive");
  }
}

void validate(const VonMisesParams& p) {
  if (!(p.kappa >= 0.0) || !std::isfinite(p.kappa)) {
    throw std::domain_error("von Mises: kappa must be nonnegative");
  }
}

CharacteristicSequence CharacteristicSequence::wrapped_normal(
    const WrappedNormalParams& p) {
  validate(p);
  return CharacteristicSequence(
      [p](long n) { return wnd_char(n, p); }, Provenance::AnalyticWnd);
}

CharacteristicSequence CharacteristicSequence::von_mises(
    const VonMisesParams& p) {
  validate(p);
  return CharacteristicSequence(
      [p](long n) { return vmd_char(n, p); }, Provenance::AnalyticVmd);
}

CharacteristicSequence CharacteristicSequence::custom(
    std::function<Complex(long)> positive_n, Provenance tag) {
  return CharacteristicSequence(std::move(positive_n), tag);
}

Complex CharacteristicSequence::operator()(long n) const {
  if (n == 0) return Complex(1.0, 0.0);
  Complex v = positive_n_(std::labs(n));
  return n > 0 ? v : std::conj(v);
}

CircularSummary circular_mean_std(std::span<const Angle> samples) {
  if (samples.empty()) {
    throw std::domain_error("circular_mean_std: empty sample list");
  }
  double sr = 0.0, si = 0.0;
  for (const Angle& a : samples) {
    sr += std::cos(a.radians());
    si += std::sin(a.radians());
  }
  const double inv = 1.0 / static_cast<double>(samples.size());
  Complex phi1(sr * inv, si * inv);
  double mod = std::abs(phi1);
  if (mod < 1e-12) {
    throw numeric_error(
        "circular_mean_std: |phi1| ~ 0, mean direction undefined");
  }
  CircularSummary out;
  out.phi1 = phi1;
  out.mean_direction = Angle(std::atan2(phi1.imag(), phi1.real()));
  out.circular_std = mod >= 1.0 ? 0.0 : std::sqrt(-2.0 * std::log(mod));
  return out;
}

CharacteristicSequence empirical_char(std::span<const Angle> samples,
                                      int n_max) {
  if (samples.empty()) {
    throw std::domain_error("empirical_char: empty sample list");
  }
  if (n_max < 0) {
    throw std::domain_error("empirical_char: n_max must be >= 0");
  }
  auto moments = std::make_shared<std::vector<Complex>>(
      static_cast<std::size_t>(n_max) + 1, Complex(0.0, 0.0));
  const double inv = 1.0 / static_cast<double>(samples.size());
  for (const Angle& a : samples) {
    for (int n = 1; n <= n_max; ++n) {
      (*moments)[static_cast<std::size_t>(n)] +=
          std::polar(1.0, n * a.radians());
    }
  }
  for (int n = 1; n <= n_max; ++n) {
    (*moments)[static_cast<std::size_t>(n)] *= inv;
  }
  (*moments)[0] = Complex(1.0, 0.0);
  return CharacteristicSequence::custom(
      [moments, n_max](long n) -> Complex {
        if (n > n_max) {
          throw std::domain_error("empirical characteristic: n beyond n_max");
        }
        return (*moments)[static_cast<std::size_t>(n)];
      },
      CharacteristicSequence::Provenance::Empirical);
}

double wnd_pdf(Angle theta, const WrappedNormalParams& p) {
  validate(p);
  const double d = angular_difference(theta.radians(), p.mu.radians());
  if (p.sigma2 > 20.0) {
    // Near-uniform regime: the Fourier series needs only a couple of terms.
    double sum = 1.0;
    for (int n = 1;; ++n) {
      double term = std::exp(-0.5 * n * n * p.sigma2);
      if (term < 1e-16) break;
      sum += 2.0 * term * std::cos(n * d);
    }
    return sum / two_pi;
  }
  const double sigma = std::sqrt(p.sigma2);
  const int kmax = static_cast<int>(std::ceil(6.0 * sigma / two_pi)) + 2;
  double sum = 0.0;
  for (int k = -kmax; k <= kmax; ++k) {
    const double x = d + two_pi * k;
    sum += std::exp(-0.5 * x * x / p.sigma2);
  }
  return sum / std::sqrt(two_pi * p.sigma2);
}

Complex wnd_char(long n, const WrappedNormalParams& p) {
  validate(p);
  const double nn = static_cast<double>(n);
  return std::polar(std::exp(-0.5 * nn * nn * p.sigma2),
                    nn * p.mu.radians());
}

double vmd_pdf(Angle theta, const VonMisesParams& p) {
  validate(p);
  const double d = angular_difference(theta.radians(), p.mu.radians());
  // exp(kappa (cos d - 1)) / (2 pi e^-kappa I_0): overflow-free at large kappa.
  return std::exp(p.kappa * (std::cos(d) - 1.0)) /
         (two_pi * bessel_i0_scaled(p.kappa));
}

Complex vmd_char(long n, const VonMisesParams& p) {
  validate(p);
  const double ratio = bessel_ratio(static_cast<int>(std::labs(n)), p.kappa);
  return std::polar(ratio, static_cast<double>(n) * p.mu.radians());
}

std::vector<Angle> sample_wnd(RngStream rng, const WrappedNormalParams& p,
                              std::size_t count) {
  validate(p);
  const double sigma = std::sqrt(p.sigma2);
  std::vector<Angle> out(count);
  for (std::size_t m = 0; m < count; ++m) {
    SubstreamRng g = rng.at(m);
    out[m] = Angle(p.mu.radians() + sigma * g.standard_normal());
  }
  return out;
}

namespace {

double draw_vmd(SubstreamRng& g, double mu, double kappa) {
  // Best-Fisher rejection sampler with wrapped-Cauchy envelope.
  const double tau = 1.0 + std::sqrt(1.0 + 4.0 * kappa * kappa);
  const double rho = (tau - std::sqrt(2.0 * tau)) / (2.0 * kappa);
  const double r = (1.0 + rho * rho) / (2.0 * rho);
  double f = 0.0;
  for (;;) {
    const double z = std::cos(kPi * g.uniform01());
    f = (1.0 + r * z) / (r + z);
    const double c = kappa * (r - f);
    const double u2 = g.uniform01();
    if (c * (2.0 - c) - u2 > 0.0) break;
    if (std::log(c / u2) + 1.0 - c >= 0.0) break;
  }
  const double sign = g.uniform01() > 0.5 ? 1.0 : -1.0;
  return canonicalize(mu + sign * std::acos(std::clamp(f, -1.0, 1.0)));
}

}  // namespace

std::vector<Angle> sample_vmd(RngStream rng, const VonMisesParams& p,
                              std::size_t count) {
  validate(p);
  std::vector<Angle> out(count);
  if (p.kappa < 1e-12) {
    for (std::size_t m = 0; m < count; ++m) {
      SubstreamRng g = rng.at(m);
      out[m] = Angle(-kPi + two_pi * g.uniform01());
    }
    return out;
  }
  for (std::size_t m = 0; m < count; ++m) {
    SubstreamRng g = rng.at(m);
    out[m] = Angle(draw_vmd(g, p.mu.radians(), p.kappa));
  }
  return out;
}

namespace {

// Golden-section minimization of a unimodal scalar function on [lo, hi].
double golden_minimize(const std::function<double(double)>& f, double lo,
                       double hi, double xtol) {
  constexpr double invphi = 0.6180339887498949;
  double a = lo, b = hi;
  double x1 = b - invphi * (b - a);
  double x2 = a + invphi * (b - a);
  double f1 = f(x1), f2 = f(x2);
  while (b - a > xtol) {
    if (f1 < f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - invphi * (b - a);
      f1 = f(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + invphi * (b - a);
      f2 = f(x2);
    }
  }
  return 0.5 * (a + b);
}

}  // namespace

WrappedNormalParams fit_wnd_to_char(const CharacteristicSequence& target,
                                    int n_fit) {
  if (n_fit < 1) {
    throw std::domain_error("fit_wnd_to_char: n_fit must be >= 1");
  }
  const Complex phi1 = target(1);
  const double mod1 = std::abs(phi1);
  if (mod1 < 1e-12 || mod1 >= 1.0 - 1e-13) {
    throw numeric_error("fit_wnd_to_char: degenerate target (|phi1| ~ 0 or 1)");
  }
  const double mu = std::atan2(phi1.imag(), phi1.real());
  std::vector<Complex> tgt(static_cast<std::size_t>(n_fit));
  for (int n = 1; n <= n_fit; ++n) {
    tgt[static_cast<std::size_t>(n) - 1] = target(n);
  }
  auto residual = [&](double s2) {
    double acc = 0.0;
    for (int n = 1; n <= n_fit; ++n) {
      const Complex model =
          std::polar(std::exp(-0.5 * n * n * s2), n * mu);
      acc += std::norm(tgt[static_cast<std::size_t>(n) - 1] - model);
    }
    return acc;
  };
  const double s2 = golden_minimize(residual, 1e-8, 50.0, 1e-12);
  return WrappedNormalParams{Angle(mu), s2};
}

}  // namespace circexp
