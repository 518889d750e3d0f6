#pragma once

// Internal: quadratic Dirichlet form and preconditioned descent helpers shared
// by the Rayleigh-quotient and constrained minimizers.  Not installed.

#include <array>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "hssys/radial.hpp"

namespace hssys::detail {

// Segment-based Dirichlet form E(u) = sum_i c_i (u_{i+1} - u_i)^2 with
// c_i = omega * (r_{i+1}^N - r_i^N) / (N dr_i^2): exact segment volume, P1
// differences.  Natural at the inner end, u pinned to 0 at the outer end.
struct DirichletForm {
  std::vector<double> c;   // size M-1
  std::size_t n = 0;       // M

  explicit DirichletForm(const RadialGrid& g) {
    n = g.size();
    c.resize(n - 1);
    const int N = g.dim;
    for (std::size_t i = 0; i + 1 < n; ++i) {
      const double dr = g.nodes[i + 1] - g.nodes[i];
      const double vol = (std::pow(g.nodes[i + 1], N) - std::pow(g.nodes[i], N)) / N;
      c[i] = g.omega * vol / (dr * dr);
    }
  }

  double energy(const std::vector<double>& u) const {
    double acc = 0.0;
    for (std::size_t i = 0; i + 1 < n; ++i) {
      const double d = u[i + 1] - u[i];
      acc += c[i] * d * d;
    }
    return acc;
  }

  // out += scale * dE/du  (dE/du_i = 2 c_{i-1}(u_i - u_{i-1}) + 2 c_i (u_i - u_{i+1}))
  void add_gradient(const std::vector<double>& u, double scale,
                    std::vector<double>& out) const {
    for (std::size_t i = 0; i < n; ++i) {
      double v = 0.0;
      if (i > 0) v += 2.0 * c[i - 1] * (u[i] - u[i - 1]);
      if (i + 1 < n) v += 2.0 * c[i] * (u[i] - u[i + 1]);
      out[i] += scale * v;
    }
  }

  // Solves (dE^2/du^2) d = rhs with the last node pinned to zero;
  // Thomas algorithm on the tridiagonal stiffness.
  std::vector<double> solve(const std::vector<double>& rhs) const {
    const std::size_t m = n - 1;  // unknowns 0..m-1, node m pinned
    std::vector<double> diag(m), upper(m, 0.0), x(m);
    for (std::size_t i = 0; i < m; ++i) {
      double d = 2.0 * c[i];
      if (i > 0) d += 2.0 * c[i - 1];
      diag[i] = d;
      if (i + 1 < m) upper[i] = -2.0 * c[i];
    }
    // forward sweep (symmetric tridiagonal, lower_i = upper_{i-1})
    std::vector<double> cp(m, 0.0), dp(m, 0.0);
    cp[0] = upper[0] / diag[0];
    dp[0] = rhs[0] / diag[0];
    for (std::size_t i = 1; i < m; ++i) {
      const double lower = upper[i - 1];
      const double denom = diag[i] - lower * cp[i - 1];
      cp[i] = (i + 1 < m) ? upper[i] / denom : 0.0;
      dp[i] = (rhs[i] - lower * dp[i - 1]) / denom;
    }
    x[m - 1] = dp[m - 1];
    for (std::size_t i = m - 1; i-- > 0;) x[i] = dp[i] - cp[i] * x[i + 1];
    std::vector<double> full(n, 0.0);
    for (std::size_t i = 0; i < m; ++i) full[i] = x[i];
    return full;
  }
};

// The canonical Dirichlet energy (the same five-point log-grid differences
// and trapezoid weights that dirichlet_energy uses) as a quadratic form, so
// descent minimizes exactly the functional that the quadrature reports.
// E(u) = sum_i sigma_i (D u)_i^2 with D the radial-derivative stencil,
// bandwidth 2.
struct CanonicalDirichletForm {
  std::size_t n = 0;
  std::vector<double> sigma;               // omega * w_i * r_i^{N-1}
  std::vector<std::array<double, 5>> st;   // coefficients on u_{i-2..i+2} for (Du)_i

  explicit CanonicalDirichletForm(const RadialGrid& g) {
    n = g.size();
    sigma.resize(n);
    st.assign(n, {0, 0, 0, 0, 0});
    const double dx = g.log_step;
    for (std::size_t i = 0; i < n; ++i)
      sigma[i] = g.omega * g.weight(i) * std::pow(g.nodes[i], g.dim - 1.0);
    auto set = [&](std::size_t i, double m2, double m1, double c0, double p1, double p2) {
      const double r = g.nodes[i];
      st[i] = {m2 / r, m1 / r, c0 / r, p1 / r, p2 / r};
    };
    set(0, 0, 0, -1.0 / dx, 1.0 / dx, 0);
    set(n - 1, 0, -1.0 / dx, 1.0 / dx, 0, 0);
    if (n >= 3) {
      set(1, 0, -0.5 / dx, 0, 0.5 / dx, 0);
      set(n - 2, 0, -0.5 / dx, 0, 0.5 / dx, 0);
    }
    for (std::size_t i = 2; i + 2 < n; ++i)
      set(i, 1.0 / (12 * dx), -8.0 / (12 * dx), 0, 8.0 / (12 * dx), -1.0 / (12 * dx));
  }

  double deriv_at(const std::vector<double>& u, std::size_t i) const {
    double d = st[i][2] * u[i];
    if (i >= 2) d += st[i][0] * u[i - 2];
    if (i >= 1) d += st[i][1] * u[i - 1];
    if (i + 1 < n) d += st[i][3] * u[i + 1];
    if (i + 2 < n) d += st[i][4] * u[i + 2];
    return d;
  }

  double energy(const std::vector<double>& u) const {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double d = deriv_at(u, i);
      acc += sigma[i] * d * d;
    }
    return acc;
  }

  // out += scale * dE/du
  void add_gradient(const std::vector<double>& u, double scale,
                    std::vector<double>& out) const {
    for (std::size_t i = 0; i < n; ++i) {
      const double f = 2.0 * sigma[i] * deriv_at(u, i) * scale;
      if (i >= 2) out[i - 2] += f * st[i][0];
      if (i >= 1) out[i - 1] += f * st[i][1];
      out[i] += f * st[i][2];
      if (i + 1 < n) out[i + 1] += f * st[i][3];
      if (i + 2 < n) out[i + 2] += f * st[i][4];
    }
  }
};

inline double signed_power(double x, double e) {
  if (x == 0.0) return 0.0;
  const double a = std::pow(std::abs(x), e);
  return x > 0.0 ? a : -a;
}

}  // namespace hssys::detail
