#include "hssys/approx.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

#include "descent.hpp"
#include "hssys/groundstate.hpp"
#include "hssys/regime.hpp"

namespace hssys {

double EpsWeight::operator()(double r) const {
  if (!(r > 0.0)) throw std::domain_error("EpsWeight: r must be > 0");
  return r < 1.0 ? std::pow(r, -(s - eps)) : std::pow(r, -(s + eps));
}

namespace {

struct ConstraintTerms {
  const RadialGrid* grid;
  const CouplingParams* params;
  double p;
  std::vector<double> node_factor;  // omega * w_i * a_eps(r_i) * r_i^{N-1}

  ConstraintTerms(const RadialGrid& g, const CouplingParams& cp, double two_star,
                  double s, double eps)
      : grid(&g), params(&cp), p(two_star) {
    const EpsWeight w{s, eps};
    node_factor.resize(g.size());
    for (std::size_t i = 0; i < g.size(); ++i)
      node_factor[i] =
          g.omega * g.weight(i) * w(g.nodes[i]) * std::pow(g.nodes[i], g.dim - 1.0);
  }

  double density(double u, double v) const {
    const auto& cp = *params;
    const double au = std::abs(u), av = std::abs(v);
    double d = cp.lambda * std::pow(au, p) + cp.mu * std::pow(av, p);
    if (au > 0.0 && av > 0.0)
      d += p * cp.kappa * std::pow(au, cp.alpha) * std::pow(av, cp.beta);
    return d;
  }

  double integral(const std::vector<double>& u, const std::vector<double>& v) const {
    double acc = 0.0;
    for (std::size_t i = 0; i < node_factor.size(); ++i)
      acc += node_factor[i] * density(u[i], v[i]);
    return acc;
  }

  // dQ/du_i and dQ/dv_i.
  void gradient(const std::vector<double>& u, const std::vector<double>& v,
                std::vector<double>& gu, std::vector<double>& gv) const {
    const auto& cp = *params;
    for (std::size_t i = 0; i < node_factor.size(); ++i) {
      const double au = std::abs(u[i]), av = std::abs(v[i]);
      double du = cp.lambda * p * detail::signed_power(u[i], p - 1.0);
      double dv = cp.mu * p * detail::signed_power(v[i], p - 1.0);
      if (av > 0.0)
        du += p * cp.kappa * cp.alpha * detail::signed_power(u[i], cp.alpha - 1.0) *
              std::pow(av, cp.beta);
      if (au > 0.0)
        dv += p * cp.kappa * cp.beta * std::pow(au, cp.alpha) *
              detail::signed_power(v[i], cp.beta - 1.0);
      gu[i] = node_factor[i] * du;
      gv[i] = node_factor[i] * dv;
    }
  }
};

}  // namespace

double constraint_integral(const RadialProfile& u, const RadialProfile& v,
                           const Exponents& exps, const CouplingParams& params,
                           double eps) {
  if (u.grid != v.grid) throw std::invalid_argument("constraint_integral: grid mismatch");
  const ConstraintTerms terms(*u.grid, params, exps.two_star_s1, exps.s1, eps);
  return terms.integral(u.values, v.values);
}

SEpsResult minimize_S_eps(std::shared_ptr<const RadialGrid> grid,
                          const Exponents& exps, const CouplingParams& params,
                          double eps, const RadialProfile& seed_u,
                          const RadialProfile& seed_v, const DescentOptions& opts) {
  validate(params);
  const double s = exps.s1;
  if (std::abs(exps.s1 - exps.s2) > 1e-14)
    throw std::domain_error("minimize_S_eps: requires s1 = s2");
  if (std::abs(params.alpha + params.beta - exps.two_star_s1) > 1e-9 * exps.two_star_s1)
    throw std::domain_error("minimize_S_eps: alpha + beta must equal 2*(s)");
  if (!(eps > 0.0 && eps < s))
    throw std::domain_error("minimize_S_eps: eps must lie in (0, s)");
  if (!(params.kappa > 0.0)) throw std::domain_error("minimize_S_eps: requires kappa > 0");
  if (seed_u.grid != grid || seed_v.grid != grid)
    throw std::invalid_argument("minimize_S_eps: seed grid mismatch");

  const double p = exps.two_star_s1;
  const std::size_t n = grid->size();
  const detail::DirichletForm A(*grid);
  const detail::CanonicalDirichletForm E(*grid);
  const ConstraintTerms terms(*grid, params, p, s, eps);

  std::vector<double> u = seed_u.values, v = seed_v.values;

  double Q = terms.integral(u, v);
  if (!(Q > 0.0))
    throw std::domain_error("minimize_S_eps: nonpositive constraint integral for seed");
  {
    const double scale = std::pow(Q, -1.0 / p);
    for (double& x : u) x *= scale;
    for (double& x : v) x *= scale;
  }

  double R = E.energy(u) + E.energy(v);
  std::vector<double> gu(n), gv(n), qu(n), qv(n);
  int iters = 0;

  for (int iter = 0; iter < opts.max_iterations; ++iter) {
    iters = iter + 1;
    std::fill(gu.begin(), gu.end(), 0.0);
    std::fill(gv.begin(), gv.end(), 0.0);
    E.add_gradient(u, 1.0, gu);
    E.add_gradient(v, 1.0, gv);
    terms.gradient(u, v, qu, qv);
    for (std::size_t i = 0; i < n; ++i) {
      gu[i] -= (2.0 * R / p) * qu[i];
      gv[i] -= (2.0 * R / p) * qv[i];
    }
    std::vector<double> du = A.solve(gu);
    std::vector<double> dv = A.solve(gv);
    double slope = 0.0;
    for (std::size_t i = 0; i < n; ++i) slope += gu[i] * du[i] + gv[i] * dv[i];
    if (!(slope > 0.0)) break;

    double eta = 0.1;
    bool accepted = false;
    std::vector<double> tu(n), tv(n);
    while (eta > 1e-18) {
      for (std::size_t i = 0; i < n; ++i) {
        tu[i] = u[i] - eta * du[i];
        tv[i] = v[i] - eta * dv[i];
      }
      const double Qt = terms.integral(tu, tv);
      if (Qt > 0.0) {
        const double Rt = (E.energy(tu) + E.energy(tv)) / std::pow(Qt, 2.0 / p);
        if (Rt <= R - 1e-4 * eta * slope) {
          const double scale = std::pow(Qt, -1.0 / p);
          for (std::size_t i = 0; i < n; ++i) {
            u[i] = tu[i] * scale;
            v[i] = tv[i] * scale;
          }
          const double prev = R;
          R = Rt;
          accepted = true;
          if ((prev - R) < opts.relative_tolerance * std::abs(R)) iter = opts.max_iterations;
          break;
        }
      }
      eta *= 0.5;
    }
    if (!accepted) {
      if (iter == 0)
        throw std::runtime_error("minimize_S_eps: descent diverged (step-size underflow)");
      break;
    }
  }

  // Final renormalization against the reported (trapezoid) constraint, then
  // the reported energy uses the same canonical quadrature.
  SEpsResult res;
  res.u = RadialProfile(grid, u);
  res.v = RadialProfile(grid, v);
  const double Qfin = constraint_integral(res.u, res.v, exps, params, eps);
  const double scale = std::pow(Qfin, -1.0 / p);
  for (double& x : res.u.values) x *= scale;
  for (double& x : res.v.values) x *= scale;
  res.S_eps = dirichlet_energy(res.u) + dirichlet_energy(res.v);
  res.iterations = iters;
  return res;
}

double half_mass_balance(const RadialProfile& u, const RadialProfile& v,
                         const Exponents& exps, const CouplingParams& params,
                         double eps) {
  if (u.grid != v.grid) throw std::invalid_argument("half_mass_balance: grid mismatch");
  const RadialGrid& g = *u.grid;
  const ConstraintTerms terms(g, params, exps.two_star_s1, exps.s1, eps);
  const EpsWeight w{exps.s1, eps};

  // Segment-wise trapezoid in the log variable; the segment containing r = 1
  // is split there with linear interpolation of the integrand.
  auto f_at = [&](std::size_t i) {
    return terms.density(u.values[i], v.values[i]) * w(g.nodes[i]) *
           std::pow(g.nodes[i], static_cast<double>(g.dim));  // r^{N-1} * Jacobian r
  };
  double inside = 0.0, outside = 0.0;
  for (std::size_t i = 0; i + 1 < g.size(); ++i) {
    const double x0 = std::log(g.nodes[i]);
    const double x1 = std::log(g.nodes[i + 1]);
    const double f0 = f_at(i), f1 = f_at(i + 1);
    if (g.nodes[i + 1] <= 1.0) {
      inside += 0.5 * (f0 + f1) * (x1 - x0);
    } else if (g.nodes[i] >= 1.0) {
      outside += 0.5 * (f0 + f1) * (x1 - x0);
    } else {
      const double xi = (0.0 - x0) / (x1 - x0);
      const double fm = f0 + (f1 - f0) * xi;
      inside += 0.5 * (f0 + fm) * (0.0 - x0);
      outside += 0.5 * (fm + f1) * (x1 - 0.0);
    }
  }
  return g.omega * std::abs(inside - outside);
}

double euler_lagrange_residual(const SEpsResult& result, const Exponents& exps,
                               const CouplingParams& params, double eps) {
  const auto grid = result.u.grid;
  const double p = exps.two_star_s1;
  const EpsWeight w{exps.s1, eps};
  const double S = result.S_eps;

  // Relative residual in the radial measure r^{N-1} dr.  Unweighted node
  // statistics would be dominated by the singular-origin nodes, whose
  // contribution to the variational problem vanishes like r^{N-1}.
  auto weighted_residual = [&](const RadialProfile& prof, bool first) {
    const std::vector<double> lap = minus_laplacian(prof);
    double num = 0.0, den = 0.0;
    for (std::size_t i = 2; i + 2 < grid->size(); ++i) {
      const double a = w(grid->nodes[i]);
      const double uu = result.u.values[i], vv = result.v.values[i];
      const double au = std::abs(uu), av = std::abs(vv);
      double rhs;
      if (first)
        rhs = S * a *
              (params.lambda * detail::signed_power(uu, p - 1.0) +
               params.kappa * params.alpha *
                   detail::signed_power(uu, params.alpha - 1.0) *
                   std::pow(av, params.beta));
      else
        rhs = S * a *
              (params.mu * detail::signed_power(vv, p - 1.0) +
               params.kappa * params.beta * std::pow(au, params.alpha) *
                   detail::signed_power(vv, params.beta - 1.0));
      const double measure =
          grid->weight(i) * std::pow(grid->nodes[i], grid->dim - 1.0);
      const double diff = lap[i] - rhs;
      num += measure * diff * diff;
      den += measure * rhs * rhs;
    }
    if (den == 0.0) throw std::domain_error("euler_lagrange_residual: zero right-hand side");
    return std::sqrt(num / den);
  };

  return std::max(weighted_residual(result.u, true), weighted_residual(result.v, false));
}

std::vector<std::pair<double, double>> s_eps_monotonicity_sweep(
    std::shared_ptr<const RadialGrid> grid, const Exponents& exps,
    const CouplingParams& params, std::span<const double> eps_list,
    const DescentOptions& opts) {
  for (std::size_t i = 0; i + 1 < eps_list.size(); ++i)
    if (!(eps_list[i] < eps_list[i + 1]))
      throw std::domain_error("s_eps_monotonicity_sweep: eps list must be strictly increasing");

  // Seeds: the projected pair when the regime admits one, diagonal otherwise.
  const double p = exps.two_star_s1;
  RadialProfile Uhat = instanton(grid, exps.s1);
  {
    const double q = weighted_power_integral(Uhat, p, exps.s1);
    const double scale = std::pow(q, -1.0 / p);
    for (double& x : Uhat.values) x *= scale;
  }
  double t0 = 1.0;
  const RegimeReport rep = classify(exps, params);
  if ((rep.classification == Classification::NontrivialGroundState ||
       rep.classification == Classification::DegenerateFamily) &&
      rep.t0)
    t0 = *rep.t0;
  RadialProfile seed_v = Uhat;
  for (double& x : seed_v.values) x *= t0;

  std::vector<std::pair<double, double>> rows;
  rows.reserve(eps_list.size());
  for (double eps : eps_list) {
    const SEpsResult r = minimize_S_eps(grid, exps, params, eps, Uhat, seed_v, opts);
    rows.emplace_back(eps, r.S_eps);
  }
  return rows;
}

void write_sweep_csv(std::ostream& os,
                     std::span<const std::pair<double, double>> rows) {
  char buf[80];
  os << "eps,S_eps\n";
  for (const auto& [e, s] : rows) {
    std::snprintf(buf, sizeof(buf), "%.17g,%.17g\n", e, s);
    os << buf;
  }
}

}  // namespace hssys
