#pragma once

#include <iosfwd>

#include "hssys/coupling.hpp"

namespace hssys {

/// One-dimensional fiber reduction of the sharp-constant problem over pairs
/// (u, t u) in the single-exponent case s1 = s2 = s:
///
///   g(t) = (1 + t^2) / [lambda + mu t^p + p kappa t^beta]^{2/p},  p = 2*(s),
///
/// with inf_{t in [0,inf]} g(t) * mu_s(Omega) = S_{alpha,beta,lambda,mu}(Omega).
/// The sign polynomial h(t) = mu t^{p-2} - kappa alpha t^beta
/// + kappa beta t^{beta-2} - lambda carries the derivative through
/// g'(t) = -2 t [lambda + mu t^p + p kappa t^beta]^{-2/p - 1} h(t).
struct FiberMap {
  CouplingParams params;
  double two_star_s = 4.0;

  double g(double t) const;
  double h(double t) const;

  double g_at_zero() const;      // lambda^{-2/p}
  double g_at_infinity() const;  // mu^{-2/p}

  // Analytic product form of g'(t); used against finite differences.
  double g_prime_product_form(double t) const;
};

enum class FiberMin { Zero, Interior, Infinity, Flat };

struct GMinResult {
  FiberMin location = FiberMin::Zero;
  double t_star = 0.0;  // witness for Interior (1.0 for Flat; unused at endpoints)
  double g_min = 0.0;
  bool endpoint_tie = false;  // interior candidate ties an endpoint within 1e-10
};

/// Location and value of inf g over [0, inf].  Interior minimizers are found
/// as sign changes of h on a log-t scan (default window [1e-8, 1e8], extended
/// when the boundary signs disagree with the analytic limits), polished by
/// bisection.  A flat h (identically zero) reports FiberMin::Flat.
GMinResult minimize_g(const FiberMap& fm);

/// Coefficients of the Nehari fiber equation for a fixed pair:
///   a = b t^{p1-2} + 2*(s2) kappa c t^{p2-2},
/// a = squared Dirichlet norm, b = single-power weighted term, c = coupling.
struct NehariCoefficients {
  double a = 1.0;
  double b = 1.0;
  double c = 0.0;
  double two_star_s1 = 4.0;
  double two_star_s2 = 4.0;
  double kappa = 1.0;
};

/// Unique positive root of the fiber equation, bracketed then bisected until
/// |residual| < 1e-12 * a.  Throws when no bracket exists (precondition
/// violation, e.g. kappa < 0 with b + 2*(s2) kappa c <= 0).
double nehari_project(const NehariCoefficients& nc);

/// Energy of the projected pair via the on-manifold two-term form
///   [1/2 - 1/2*(s2)] a t^2 + [1/2*(s2) - 1/2*(s1)] b t^{2*(s1)}.
/// Valid when t solves the fiber equation.
double fiber_energy(const NehariCoefficients& nc, double t);

// CSV sampler "t,g,h" on a log-spaced abscissa, for plotting.
void write_fiber_csv(std::ostream& os, const FiberMap& fm, double t_min,
                     double t_max, int count);

}  // namespace hssys
