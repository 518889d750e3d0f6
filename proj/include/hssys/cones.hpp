#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

namespace hssys {

/// One sampled cone constant: half-aperture theta in (0, pi] and the sharp
/// constant S(Omega_theta).  S is non-increasing in theta; for N >= 4 the
/// theta = pi entry coincides with the R^N value.
struct ConeEntry {
  double theta = 0.0;
  double S_value = 0.0;
  std::string provenance;
};

struct ConeConstantTable {
  std::vector<ConeEntry> entries;  // kept sorted by theta ascending
};

struct TableViolation {
  std::size_t i = 0;  // indices into entries with theta_i < theta_j but S_i < S_j
  std::size_t j = 0;
};

/// Monotonicity audit: every pair ordered by theta must have non-increasing S.
std::vector<TableViolation> validate_table(const ConeConstantTable& table);

/// The theta = pi anchor built from the full-space constant
/// S = sharp_ratio * mu_s; for N >= 4 this is the infimum over proper cones.
ConeEntry rn_anchor_entry(double sharp_ratio, double mu_s);

struct ThetaBracket {
  double theta_lo = 0.0;  // 0 marks the open end theta -> 0 (S -> infinity)
  double theta_hi = 0.0;
  bool open_at_zero = false;
};

/// Adjacent apertures (theta_i, theta_j) with S_i >= tau >= S_j, by the
/// intermediate-value property of theta -> S(Omega_theta).  tau below the
/// theta = pi entry (the infimum over cones) is an error; tau above every
/// entry returns the open bracket toward theta = 0.
ThetaBracket intermediate_value_locate(const ConeConstantTable& table, double tau);

/// Energy of the k-th glued sign-changing solution at sub-cone constant S:
///   (1/2 - 1/2*(s)) * S^{2/(2*(s)-2)} * 2^{k(N-1)}.
double gluing_energy(int k, int N, double two_star_s, double S_subcone);

enum class Attainment { Attained, NotDecidable };

/// Attained when S_omega < min(S0, Sinf) - 1e-12 (strict inequality is
/// sufficient); equality cases stay undecided.  S_omega above min(S0, Sinf)
/// violates the upper bound and is rejected.
Attainment attainment_calculus(double S_omega, double S0, double Sinf);

// CSV "theta,S,provenance".
void write_table_csv(std::ostream& os, const ConeConstantTable& table);
ConeConstantTable read_table_csv(std::istream& is);

}  // namespace hssys
