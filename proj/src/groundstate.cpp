#include "hssys/groundstate.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>
#include <vector>

#include "descent.hpp"
#include "hssys/exponents.hpp"
#include "json.hpp"

namespace hssys {

RadialProfile instanton(std::shared_ptr<const RadialGrid> grid, double s) {
  if (!(s > 0.0 && s < 2.0)) throw std::domain_error("instanton: s must lie in (0,2)");
  const double sigma = 2.0 - s;
  const double expo = -(grid->dim - 2.0) / sigma;
  return RadialProfile::from_function(
      grid, [=](double r) { return std::pow(1.0 + std::pow(r, sigma), expo); });
}

double instanton_pde_constant(int N, double s) {
  if (N < 3 || !(s > 0.0 && s < 2.0))
    throw std::domain_error("instanton_pde_constant: invalid (N,s)");
  return (N - 2.0) * (N - s);
}

double mu_s_quadrature(std::shared_ptr<const RadialGrid> grid, double s) {
  const RadialProfile U = instanton(grid, s);
  const double p = two_star(grid->dim, s);
  const double norm = weighted_lp_norm(p, s, U);
  const double value = dirichlet_energy(U) / (norm * norm);
  if (!std::isfinite(value)) throw std::runtime_error("mu_s_quadrature: non-finite result");
  return value;
}

double mu_s_minimize(std::shared_ptr<const RadialGrid> grid, double s,
                     const RadialProfile& seed) {
  if (seed.grid != grid) throw std::invalid_argument("mu_s_minimize: seed grid mismatch");
  const double p = two_star(grid->dim, s);
  const std::size_t n = grid->size();
  const double e = grid->dim - 1.0 - s;

  std::vector<double> u = seed.values;

  // Descend the canonical (reported) quotient; the segment form only serves
  // as the preconditioner.
  const detail::DirichletForm A(*grid);
  const detail::CanonicalDirichletForm E(*grid);

  auto Q_of = [&](const std::vector<double>& w) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double a = std::abs(w[i]);
      if (a == 0.0) continue;
      acc += grid->weight(i) * std::pow(a, p) * std::pow(grid->nodes[i], e);
    }
    return grid->omega * acc;
  };

  double Q = Q_of(u);
  if (!(Q > 0.0)) throw std::invalid_argument("mu_s_minimize: seed has zero weighted norm");
  {
    const double scale = std::pow(Q, -1.0 / p);
    for (double& x : u) x *= scale;
  }

  double R = E.energy(u);
  std::vector<double> grad(n), qgrad(n);

  const int max_iter = 50000;
  for (int iter = 0; iter < max_iter; ++iter) {
    // Euclidean gradient of E/Q^{2/p} on the Q = 1 slice.
    std::fill(grad.begin(), grad.end(), 0.0);
    E.add_gradient(u, 1.0, grad);
    for (std::size_t i = 0; i < n; ++i) {
      qgrad[i] = grid->omega * grid->weight(i) * std::pow(grid->nodes[i], e) * p *
                 detail::signed_power(u[i], p - 1.0);
      grad[i] -= (2.0 * R / p) * qgrad[i];
    }
    std::vector<double> dir = A.solve(grad);
    double slope = 0.0;
    for (std::size_t i = 0; i < n; ++i) slope += grad[i] * dir[i];
    if (!(slope > 0.0)) break;  // stationary

    double eta = 0.1;
    bool accepted = false;
    std::vector<double> trial(n);
    while (eta > 1e-18) {
      for (std::size_t i = 0; i < n; ++i) trial[i] = u[i] - eta * dir[i];
      const double Qt = Q_of(trial);
      if (Qt > 0.0) {
        const double Rt = E.energy(trial) / std::pow(Qt, 2.0 / p);
        if (Rt <= R - 1e-4 * eta * slope) {
          const double scale = std::pow(Qt, -1.0 / p);
          for (std::size_t i = 0; i < n; ++i) u[i] = trial[i] * scale;
          const double prev = R;
          R = Rt;
          accepted = true;
          if ((prev - R) < 1e-10 * std::abs(R)) iter = max_iter;  // converged
          break;
        }
      }
      eta *= 0.5;
    }
    if (!accepted) {
      if (iter == 0) throw std::runtime_error("mu_s_minimize: descent diverged (step-size underflow)");
      break;
    }
  }

  RadialProfile out(grid, u);
  const double norm = weighted_lp_norm(p, s, out);
  return dirichlet_energy(out) / (norm * norm);
}

namespace {

// mu_s-normalized scalar extremal: instanton scaled to unit weighted p-integral,
// so the Rayleigh value, the Nehari identity and the unit constraint all hold
// exactly in quadrature.
RadialProfile normalized_extremal(std::shared_ptr<const RadialGrid> grid, double s,
                                  double p) {
  RadialProfile U = instanton(grid, s);
  const double q = weighted_power_integral(U, p, s);
  const double scale = std::pow(q, -1.0 / p);
  for (double& x : U.values) x *= scale;
  return U;
}

}  // namespace

GroundStatePair build_ground_state(const RegimeReport& report, double mu_s,
                                   std::shared_ptr<const RadialGrid> grid,
                                   double s, const CouplingParams& params,
                                   std::optional<double> t0_override) {
  if (report.classification != Classification::NontrivialGroundState &&
      report.classification != Classification::DegenerateFamily)
    throw std::invalid_argument("build_ground_state: regime does not admit a nontrivial pair");

  double t0;
  if (report.classification == Classification::DegenerateFamily)
    t0 = t0_override.value_or(report.t0.value_or(1.0));
  else
    t0 = report.t0 ? *report.t0 : t0_override.value_or(0.0);
  if (!(t0 > 0.0)) throw std::invalid_argument("build_ground_state: need t0 > 0");

  const double p = two_star(grid->dim, s);
  const RadialProfile Uhat = normalized_extremal(grid, s, p);

  const double S = report.sharp_ratio * mu_s;
  const double D = params.lambda + params.mu * std::pow(t0, p) +
                   p * params.kappa * std::pow(t0, params.beta);
  if (!(D > 0.0)) throw std::domain_error("build_ground_state: nonpositive fiber denominator");
  const double C = std::pow(S, 1.0 / (p - 2.0)) * std::pow(D, -1.0 / p);

  GroundStatePair pair;
  std::vector<double> uv(Uhat.values), vv(Uhat.values);
  for (double& x : uv) x *= C;
  for (double& x : vv) x *= t0 * C;
  pair.u = RadialProfile(grid, std::move(uv));
  pair.v = RadialProfile(grid, std::move(vv));
  pair.t0 = t0;
  pair.C_t0 = C;
  pair.sharp_constant = S;
  pair.energy = ground_state_energy(report.sharp_ratio, mu_s, p);
  return pair;
}

std::pair<double, double> system_residual(const GroundStatePair& pair, double s,
                                          const CouplingParams& params) {
  const auto grid = pair.u.grid;
  const double p = two_star(grid->dim, s);
  const auto& u = pair.u.values;
  const auto& v = pair.v.values;

  auto rhs_profile = [&](bool first) {
    std::vector<double> rhs(grid->size());
    for (std::size_t i = 0; i < grid->size(); ++i) {
      const double w = std::pow(grid->nodes[i], -s);
      const double au = std::abs(u[i]), av = std::abs(v[i]);
      if (first) {
        rhs[i] = w * (params.lambda * detail::signed_power(u[i], p - 1.0) +
                      params.kappa * params.alpha *
                          detail::signed_power(u[i], params.alpha - 1.0) *
                          std::pow(av, params.beta));
      } else {
        rhs[i] = w * (params.mu * detail::signed_power(v[i], p - 1.0) +
                      params.kappa * params.beta * std::pow(au, params.alpha) *
                          detail::signed_power(v[i], params.beta - 1.0));
      }
    }
    return RadialProfile(grid, std::move(rhs));
  };

  return {laplacian_residual(pair.u, rhs_profile(true)),
          laplacian_residual(pair.v, rhs_profile(false))};
}

double pair_energy_quadrature(const GroundStatePair& pair, double s,
                              const CouplingParams& params) {
  const auto grid = pair.u.grid;
  const double p = two_star(grid->dim, s);
  const double a = dirichlet_energy(pair.u) + dirichlet_energy(pair.v);
  const double bu = weighted_power_integral(pair.u, p, s);
  const double bv = weighted_power_integral(pair.v, p, s);
  const double c = mixed_weighted_integral(pair.u, pair.v, params.alpha, params.beta,
                                           [s](double r) { return std::pow(r, -s); });
  return 0.5 * a - (params.lambda * bu + params.mu * bv + p * params.kappa * c) / p;
}

double pohozaev_residual(const GroundStatePair& pair, double s1, double s2,
                         const CouplingParams& params) {
  const auto grid = pair.u.grid;
  const int N = grid->dim;
  const double p1 = two_star(N, s1);

  const double dir = dirichlet_energy(pair.u) + dirichlet_energy(pair.v);
  const double bu = weighted_power_integral(pair.u, p1, s1);
  const double bv = weighted_power_integral(pair.v, p1, s1);
  const double c = mixed_weighted_integral(pair.u, pair.v, params.alpha, params.beta,
                                           [s2](double r) { return std::pow(r, -s2); });

  const double lhs = 2.0 * (N - s1) * (params.lambda * bu + params.mu * bv) / p1 +
                     2.0 * (N - s2) * params.kappa * c;
  const double rhs = (N - 2.0) * dir;
  if (rhs == 0.0) {
    if (lhs == 0.0) return 0.0;
    throw std::domain_error("pohozaev_residual: zero Dirichlet side");
  }
  return std::abs(lhs - rhs) / std::abs(rhs);
}

Eta1Result eigen_eta1_check(std::shared_ptr<const RadialGrid> grid, double s,
                            double lambda, std::span<const RadialProfile> tests) {
  if (!(lambda > 0.0)) throw std::domain_error("eigen_eta1_check: lambda must be > 0");
  const double p = two_star(grid->dim, s);
  RadialProfile Ulam = normalized_extremal(grid, s, p);
  {
    const double mu_hat = dirichlet_energy(Ulam);
    const double scale = std::pow(mu_hat / lambda, 1.0 / (p - 2.0));
    for (double& x : Ulam.values) x *= scale;
  }

  auto quotient = [&](const RadialProfile& v) {
    if (v.grid != grid) throw std::invalid_argument("eigen_eta1_check: test grid mismatch");
    double den = 0.0;
    for (std::size_t i = 0; i < grid->size(); ++i) {
      const double w = std::abs(Ulam.values[i]);
      den += grid->weight(i) * std::pow(w, p - 2.0) * v.values[i] * v.values[i] *
             std::pow(grid->nodes[i], grid->dim - 1.0 - s);
    }
    den *= grid->omega;
    if (!(den > 0.0)) throw std::domain_error("eigen_eta1_check: zero denominator");
    return dirichlet_energy(v) / den;
  };

  Eta1Result res;
  res.value_at_extremal = quotient(Ulam);
  res.min_over_tests = res.value_at_extremal;
  bool first = true;
  for (const auto& t : tests) {
    const double q = quotient(t);
    if (first || q < res.min_over_tests) res.min_over_tests = q;
    first = false;
  }
  return res;
}

bool decay_check(const RadialProfile& profile, double /*s*/) {
  const auto& g = *profile.grid;
  const double cutoff = g.r_max / 10.0;
  std::vector<double> comp;
  for (std::size_t i = 0; i < g.size(); ++i)
    if (g.nodes[i] >= cutoff)
      comp.push_back(std::abs(profile.values[i]) * std::pow(g.nodes[i], g.dim - 2.0));
  if (comp.size() < 4) return false;
  std::vector<double> sorted = comp;
  std::sort(sorted.begin(), sorted.end());
  const double median = sorted[sorted.size() / 2];
  const double sup = sorted.back();
  return sup <= 2.0 * median;
}

void write_pair_csv(std::ostream& os, const GroundStatePair& pair) {
  char buf[128];
  os << "r,u,v\n";
  for (std::size_t i = 0; i < pair.u.size(); ++i) {
    std::snprintf(buf, sizeof(buf), "%.17g,%.17g,%.17g\n", pair.u.grid->nodes[i],
                  pair.u.values[i], pair.v.values[i]);
    os << buf;
  }
}

std::string pair_meta_json(const GroundStatePair& pair) {
  nlohmann::json j;
  j["t0"] = pair.t0;
  j["C_t0"] = pair.C_t0;
  j["energy"] = pair.energy;
  j["sharp_constant"] = pair.sharp_constant;
  return j.dump(2);
}

}  // namespace hssys
