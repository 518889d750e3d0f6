#pragma once

#include <iosfwd>
#include <span>
#include <utility>
#include <vector>

#include "hssys/coupling.hpp"
#include "hssys/exponents.hpp"
#include "hssys/radial.hpp"

namespace hssys {

/// Regularized singular weight: r^{-(s-eps)} inside the unit ball,
/// r^{-(s+eps)} outside.  Continuous at r = 1 with value 1, pointwise
/// dominated by r^{-s}, and decreasing in eps.
struct EpsWeight {
  double s = 1.0;
  double eps = 0.0;

  double operator()(double r) const;
};

struct SEpsResult {
  double S_eps = 0.0;
  RadialProfile u;
  RadialProfile v;
  int iterations = 0;
};

struct DescentOptions {
  int max_iterations = 20000;
  double relative_tolerance = 1e-8;
};

/// Constrained minimization of the Dirichlet energy of a radial pair under
/// int a_eps [lambda|u|^p + mu|v|^p + p kappa |u|^alpha |v|^beta] dx = 1,
/// by projected gradient descent (renormalize after each step).  Returns the
/// converged energy S_eps and the minimizer, constraint integral 1 within
/// 1e-10.  Requires eps in (0, s) and admissible kappa > 0.
SEpsResult minimize_S_eps(std::shared_ptr<const RadialGrid> grid,
                          const Exponents& exps, const CouplingParams& params,
                          double eps, const RadialProfile& seed_u,
                          const RadialProfile& seed_v,
                          const DescentOptions& opts = {});

/// Constraint integral of a pair against the eps weight.
double constraint_integral(const RadialProfile& u, const RadialProfile& v,
                           const Exponents& exps, const CouplingParams& params,
                           double eps);

/// |mass(B_1) - mass(B_1^c)| of the constraint density.  Extremals split the
/// mass evenly, so this vanishes for them up to solver and grid error.
double half_mass_balance(const RadialProfile& u, const RadialProfile& v,
                         const Exponents& exps, const CouplingParams& params,
                         double eps);

/// Relative l2 residual of the Euler-Lagrange system
///   -Delta u = S_eps (lambda a_eps |u|^{p-2} u + kappa alpha a_eps |u|^{alpha-2} u |v|^beta)
/// (and its v counterpart) over interior nodes; the larger of the two.
double euler_lagrange_residual(const SEpsResult& result, const Exponents& exps,
                               const CouplingParams& params, double eps);

/// minimize_S_eps over a strictly increasing eps list.  Seeds are
/// (U_hat, t0 U_hat) when classify reports a nontrivial or degenerate regime,
/// (U_hat, U_hat) otherwise.  The returned values are non-decreasing in eps
/// up to solver tolerance.
std::vector<std::pair<double, double>> s_eps_monotonicity_sweep(
    std::shared_ptr<const RadialGrid> grid, const Exponents& exps,
    const CouplingParams& params, std::span<const double> eps_list,
    const DescentOptions& opts = {});

// CSV "eps,S_eps".
void write_sweep_csv(std::ostream& os,
                     std::span<const std::pair<double, double>> rows);

}  // namespace hssys
