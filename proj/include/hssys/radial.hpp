#pragma once

#include <cstddef>
#include <functional>
#include <iosfwd>
#include <memory>
#include <vector>

namespace hssys {

/// Log-spaced radial grid on [r_min, r_max] for radial functions on R^N.
/// Integrals against dr are composite trapezoid in the log variable, so the
/// node weight is dx * r_i (halved at the ends).
struct RadialGrid {
  int dim = 3;
  std::vector<double> nodes;
  double r_min = 1e-6;
  double r_max = 1e6;
  double log_step = 0.0;
  double omega = 0.0;  // surface measure of S^{N-1}

  static std::shared_ptr<const RadialGrid> log_spaced(int N, double r_min = 1e-6,
                                                      double r_max = 1e6,
                                                      int points = 4096);

  std::size_t size() const { return nodes.size(); }

  // dr-equivalent trapezoid weight of node i.
  double weight(std::size_t i) const {
    return log_step * nodes[i] * ((i == 0 || i + 1 == nodes.size()) ? 0.5 : 1.0);
  }
};

/// Sampled radial function.  Immutable by convention once built.
struct RadialProfile {
  std::shared_ptr<const RadialGrid> grid;
  std::vector<double> values;

  RadialProfile() = default;
  RadialProfile(std::shared_ptr<const RadialGrid> g, std::vector<double> v);

  static RadialProfile zero(std::shared_ptr<const RadialGrid> g);
  static RadialProfile from_function(std::shared_ptr<const RadialGrid> g,
                                     const std::function<double(double)>& f);

  std::size_t size() const { return values.size(); }
};

/// omega * integral |u|^p r^{N-1-s} dr (the p-th power of the weighted norm).
double weighted_power_integral(const RadialProfile& u, double p, double s);

/// ( omega * integral |u|^p r^{N-1-s} dr )^{1/p}.  Throws on non-finite result.
double weighted_lp_norm(double p, double s, const RadialProfile& u);

/// omega * integral |u|^alpha |v|^beta w(r) r^{N-1} dr for a caller-supplied
/// radial weight w (e.g. r^{-s} or the eps-regularized weight).
double mixed_weighted_integral(const RadialProfile& u, const RadialProfile& v,
                               double alpha, double beta,
                               const std::function<double(double)>& radial_weight);

/// Centered 3-point first derivative on the non-uniform grid (one-sided at
/// the two ends).  Exact for quadratics.
std::vector<double> derivative(const RadialProfile& u);

/// -u'' - (N-1)u'/r at every node (ends use one-sided stencils and are not
/// meaningful; residual checks skip two nodes on each side).
std::vector<double> minus_laplacian(const RadialProfile& u);

/// omega * integral (u')^2 r^{N-1} dr.
double dirichlet_energy(const RadialProfile& u);

/// Relative l2 residual || -Delta u - rhs || / || rhs || over interior nodes
/// (two excluded on each side).  Zero pair convention: 0.
double laplacian_residual(const RadialProfile& u, const RadialProfile& rhs);

// CSV: header "r,value", one node per row, 17 significant digits.
void write_profile_csv(std::ostream& os, const RadialProfile& u);
RadialProfile read_profile_csv(std::istream& is, int N);

}  // namespace hssys
