#pragma once

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <utility>

#include "hssys/coupling.hpp"
#include "hssys/radial.hpp"
#include "hssys/regime.hpp"

namespace hssys {

/// Closed-form extremal U(r) = (1 + r^{2-s})^{-(N-2)/(2-s)}, normalized so
/// U(0) = 1.  Solves -Delta U = c_s U^{2*(s)-1} / |x|^s with
/// c_s = (N-2)(N-s).
RadialProfile instanton(std::shared_ptr<const RadialGrid> grid, double s);

/// The constant c_s = (N-2)(N-s) above.
double instanton_pde_constant(int N, double s);

/// Rayleigh quotient ||grad U||^2 / |U|^2_{2*(s),s} of the instanton:
/// the scalar sharp constant mu_s(R^N) by quadrature.
double mu_s_quadrature(std::shared_ptr<const RadialGrid> grid, double s);

/// Independent check of mu_s_quadrature: projected gradient descent of the
/// Dirichlet energy under |u|_{2*(s),s} = 1, started from `seed`.  Returns
/// the converged Rayleigh quotient.
double mu_s_minimize(std::shared_ptr<const RadialGrid> grid, double s,
                     const RadialProfile& seed);

/// Ground-state pair (u, v) = C(t0) (U_hat, t0 U_hat) of the coupled system,
/// where U_hat is the mu_s-normalized scalar extremal.
struct GroundStatePair {
  RadialProfile u;
  RadialProfile v;
  double t0 = 1.0;
  double C_t0 = 1.0;
  double energy = 0.0;
  double sharp_constant = 0.0;
};

/// Builds the pair for a NontrivialGroundState or DegenerateFamily report:
/// C(t0) = S^{1/(2*(s)-2)} (lambda + mu t0^{2*(s)} + 2*(s) kappa t0^beta)^{-1/2*(s)}
/// with S = report.sharp_ratio * mu_s.  For the degenerate family any t0 > 0
/// is valid; it defaults to 1 when neither the report nor the caller names one.
GroundStatePair build_ground_state(const RegimeReport& report, double mu_s,
                                   std::shared_ptr<const RadialGrid> grid,
                                   double s, const CouplingParams& params,
                                   std::optional<double> t0_override = std::nullopt);

/// Relative PDE residuals of the pair on the two system equations.
std::pair<double, double> system_residual(const GroundStatePair& pair, double s,
                                          const CouplingParams& params);

/// Energy functional Phi of the pair by direct quadrature (for the
/// consistency check against ground_state_energy).
double pair_energy_quadrature(const GroundStatePair& pair, double s,
                              const CouplingParams& params);

/// |LHS - RHS| / |RHS| of the scale-balance identity on R^N,
///   2(N-s1) * [power terms] + 2(N-s2) * [coupling term] = (N-2) * Dirichlet,
/// computed by independent quadratures of both sides.  Zero pair gives 0.
double pohozaev_residual(const GroundStatePair& pair, double s1, double s2,
                         const CouplingParams& params);

struct Eta1Result {
  double value_at_extremal = 0.0;  // expected lambda
  double min_over_tests = 0.0;
};

/// Rayleigh quotient ||grad v||^2 / int U_lambda^{2*(s)-2} v^2 |x|^{-s} dx at
/// v = U_lambda and its minimum over the supplied test profiles.
Eta1Result eigen_eta1_check(std::shared_ptr<const RadialGrid> grid, double s,
                            double lambda, std::span<const RadialProfile> tests);

/// Flatness of the compensated tail u(r) r^{N-2} over the outer decade of
/// nodes: true iff its sup is at most twice its median there.
bool decay_check(const RadialProfile& profile, double s);

// CSV "r,u,v" and JSON metadata {t0, C_t0, energy, sharp_constant}.
void write_pair_csv(std::ostream& os, const GroundStatePair& pair);
std::string pair_meta_json(const GroundStatePair& pair);

}  // namespace hssys
