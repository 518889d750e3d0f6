#pragma once

// Test-side oracles, independent of the library's computation paths:
// Beta-integral values for the instanton, smooth bump generators, and a
// deterministic RNG wrapper.

#include <cmath>
#include <random>
#include <vector>

#include "hssys/radial.hpp"

namespace oracles {

// B(a,b) = Gamma(a)Gamma(b)/Gamma(a+b) via lgamma for stability.
inline double beta_fn(double a, double b) {
  return std::exp(std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b));
}

// For U(r) = (1 + r^{2-s})^{-(N-2)/(2-s)} on R^N (sigma = 2-s, m = (N-2)/sigma):
//   int_0^inf U^{2*(s)} r^{N-1-s} dr = (1/sigma) B((N-s)/sigma, (N-s)/sigma)
inline double instanton_weighted_power_integral(int N, double s) {
  const double sigma = 2.0 - s;
  const double a = (N - s) / sigma;
  return beta_fn(a, a) / sigma;
}

//   int_0^inf (U')^2 r^{N-1} dr = m^2 sigma B(m+2, m)
inline double instanton_gradient_integral(int N, double s) {
  const double sigma = 2.0 - s;
  const double m = (N - 2.0) / sigma;
  return m * m * sigma * beta_fn(m + 2.0, m);
}

// mu_s(R^N) from the two Beta integrals (omega included).
inline double mu_s_reference(int N, double s, double omega) {
  const double p = 2.0 * (N - s) / (N - 2);
  const double grad = omega * instanton_gradient_integral(N, s);
  const double norm_p = omega * instanton_weighted_power_integral(N, s);
  return grad / std::pow(norm_p, 2.0 / p);
}

// Smooth compactly supported bump in the log variable, centered at c with
// half-width w: u(r) = amp * exp(1 - 1/(1-z^2)), z = ln(r/c)/w.
inline hssys::RadialProfile bump(std::shared_ptr<const hssys::RadialGrid> grid,
                                 double center, double width, double amplitude = 1.0) {
  return hssys::RadialProfile::from_function(grid, [=](double r) {
    const double z = std::log(r / center) / width;
    if (std::abs(z) >= 1.0) return 0.0;
    return amplitude * std::exp(1.0 - 1.0 / (1.0 - z * z));
  });
}

struct Rng {
  std::mt19937_64 gen;
  explicit Rng(unsigned long seed) : gen(seed) {}
  double uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(gen);
  }
  double log_uniform(double lo, double hi) {
    return std::exp(uniform(std::log(lo), std::log(hi)));
  }
};

inline hssys::RadialProfile random_bump(std::shared_ptr<const hssys::RadialGrid> grid,
                                        Rng& rng) {
  const double c = rng.log_uniform(1e-2, 1e2);
  const double w = rng.uniform(0.3, 1.5);
  const double a = rng.uniform(0.5, 2.0);
  return bump(grid, c, w, a);
}

}  // namespace oracles
