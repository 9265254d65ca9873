#pragma once

// Independent reference implementations used only by tests. Everything here
// is deliberately written from the defining formulas, not from the library
// code paths it checks.

#include <complex>

namespace oracles {

// Ascending power series sum_k (-1)^k (x/2)^{2k+n} / (k! (k+n)!), summed in
// long double. Cancellation-safe for |x| up to ~15, which covers every value
// the tests freeze.
inline long double bessel_series(int n, long double x) {
  long double term = 1.0L;
  for (int i = 1; i <= n; ++i) term *= (x / 2) / i;  // (x/2)^n / n!
  long double sum = term;
  for (int k = 1; k < 200; ++k) {
    term *= -(x / 2) * (x / 2) / (static_cast<long double>(k) * (k + n));
    sum += term;
    if (std::abs(term) < 1e-30L * (std::abs(sum) + 1e-30L)) break;
  }
  return sum;
}

// Closed-form evolution of the static two-level generator
//   H = -1/2 [[0, v], [v, 2*delta]]
// applied for time t to (c_g, c_e): exp(-i H t) via the Pauli decomposition
// H = a*I + bz*sz + bx*sx with a = -delta/2, bz = delta/2, bx = -v/2.
struct StaticTwoLevel {
  std::complex<double> c_g;
  std::complex<double> c_e;
};

inline StaticTwoLevel evolve_static(double v, double delta, double t, std::complex<double> g0,
                                    std::complex<double> e0) {
  const std::complex<double> i(0.0, 1.0);
  const double a = -0.5 * delta;
  const double bz = 0.5 * delta;
  const double bx = -0.5 * v;
  const double b = std::sqrt(bz * bz + bx * bx);
  std::complex<double> cg, ce;
  if (b == 0.0) {
    cg = g0;
    ce = e0;
  } else {
    const double nz = bz / b, nx = bx / b;
    const std::complex<double> c = std::cos(b * t);
    const std::complex<double> s = -i * std::sin(b * t);
    cg = (c + s * nz) * g0 + s * nx * e0;
    ce = s * nx * g0 + (c - s * nz) * e0;
  }
  const std::complex<double> phase = std::exp(-i * (a * t));
  return {phase * cg, phase * ce};
}

}  // namespace oracles
