#pragma once

#include <vector>

namespace circexp {

/// I_n(kappa) / I_0(kappa) for n >= 0, computed by a backward (Miller-type)
/// recurrence on the ratios I_{m+1}/I_m. Free of overflow for kappa well
/// beyond 1e4. Monotonically nonincreasing in n for fixed kappa.
double bessel_ratio(int n, double kappa);

/// Table of I_n(kappa)/I_0(kappa), n = 0..n_max, from one backward pass.
std::vector<double> bessel_ratio_table(int n_max, double kappa);

/// exp(-kappa) * I_0(kappa), via the normalization identity
/// I_0 + 2*sum_{m>=1} I_m = exp(kappa) applied to the ratio table.
double bessel_i0_scaled(double kappa);

/// q-Pochhammer (q; q)_n = prod_{j=1..n} (1 - q^j), computed iteratively.
double q_pochhammer(double q, int n);

}  // namespace circexp
