#include "circexp/special.hpp"

#include <cmath>
#include <stdexcept>

namespace circexp {

namespace {

// Backward recurrence on r_m = I_{m+1}/I_m, seeded far above the transition
// order so the arbitrary start value has washed out by m = n_max.
std::vector<double> ratio_chain(int n_max, double kappa) {
  int start = n_max + 2 +
              static_cast<int>(kappa + 12.0 * std::sqrt(kappa) + 40.0);
  std::vector<double> r(static_cast<std::size_t>(start) + 1, 0.0);
  for (int m = start; m >= 1; --m) {
    r[static_cast<std::size_t>(m) - 1] =
        1.0 / (2.0 * m / kappa + r[static_cast<std::size_t>(m)]);
  }
  return r;
}

}  // namespace

std::vector<double> bessel_ratio_table(int n_max, double kappa) {
  if (n_max < 0 || kappa < 0.0) {
    throw std::domain_error("bessel_ratio_table: need n_max >= 0, kappa >= 0");
  }
  std::vector<double> out(static_cast<std::size_t>(n_max) + 1, 0.0);
  out[0] = 1.0;
  if (kappa == 0.0 || n_max == 0) {
    return out;
  }
  auto r = ratio_chain(n_max, kappa);
  double prod = 1.0;
  for (int n = 1; n <= n_max; ++n) {
    prod *= r[static_cast<std::size_t>(n) - 1];
    out[static_cast<std::size_t>(n)] = prod;
  }
  return out;
}

double bessel_ratio(int n, double kappa) {
  if (n < 0 || kappa < 0.0) {
    throw std::domain_error("bessel_ratio: need n >= 0, kappa >= 0");
  }
  if (n == 0) return 1.0;
  if (kappa == 0.0) return 0.0;
  auto table = bessel_ratio_table(n, kappa);
  return table[static_cast<std::size_t>(n)];
}

double bessel_i0_scaled(double kappa) {
  if (kappa < 0.0) {
    throw std::domain_error("bessel_i0_scaled: need kappa >= 0");
  }
  if (kappa == 0.0) return 1.0;
  auto r = ratio_chain(0, kappa);
  // exp(-kappa) I_0 = 1 / (1 + 2 sum_{m>=1} I_m/I_0)
  double sum = 0.0;
  double prod = 1.0;
  for (std::size_t m = 0; m + 1 < r.size(); ++m) {
    prod *= r[m];
    sum += prod;
    if (prod < 1e-18 * (1.0 + sum)) break;
  }
  return 1.0 / (1.0 + 2.0 * sum);
}

double q_pochhammer(double q, int n) {
  if (n < 0) {
    throw std::domain_error("q_pochhammer: need n >= 0");
  }
  double prod = 1.0;
  double qj = q;
  for (int j = 1; j <= n; ++j) {
    prod *= (1.0 - qj);
    qj *= q;
  }
  return prod;
}

}  // namespace circexp
