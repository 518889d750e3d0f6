#include "hssys/exponents.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "hssys/radial.hpp"

namespace hssys {

double two_star(int N, double s) {
  if (N < 3) throw std::domain_error("two_star: dimension N must be >= 3, got " + std::to_string(N));
  if (!(s >= 0.0 && s <= 2.0))
    throw std::domain_error("two_star: s must lie in [0,2], got " + std::to_string(s));
  return 2.0 * (N - s) / (N - 2);
}

double interp_theta(int N, double s1, double s2, double s3) {
  if (N < 3) throw std::domain_error("interp_theta: N must be >= 3");
  if (!(0.0 <= s1 && s1 < s2 && s2 < s3 && s3 <= 2.0))
    throw std::domain_error("interp_theta: need 0 <= s1 < s2 < s3 <= 2");
  return (N - s1) * (s3 - s2) / ((N - s2) * (s3 - s1));
}

double vartheta(int N, double s1, double s2) {
  if (N < 3) throw std::domain_error("vartheta: N must be >= 3");
  if (!(0.0 <= s1 && s1 <= s2 && s2 <= 2.0))
    throw std::domain_error("vartheta: need 0 <= s1 <= s2 <= 2");
  if (s2 == 0.0) throw std::domain_error("vartheta: s2 must be positive");
  return N * (s2 - s1) / (s2 * (N - s1));
}

double varsigma(int N, double s1, double s2) {
  if (N < 3) throw std::domain_error("varsigma: N must be >= 3");
  if (!(0.0 <= s1 && s1 <= s2 && s2 <= 2.0))
    throw std::domain_error("varsigma: need 0 <= s1 <= s2 <= 2");
  return (N - s1) * (2.0 - s2) / ((N - s2) * (2.0 - s1));
}

Exponents Exponents::make(int N, double s1, double s2) {
  if (N < 3) throw std::domain_error("Exponents: N must be >= 3");
  if (!(s1 > 0.0 && s1 < 2.0) || !(s2 > 0.0 && s2 < 2.0))
    throw std::domain_error("Exponents: singularity orders must lie in (0,2)");
  Exponents e;
  e.N = N;
  e.s1 = s1;
  e.s2 = s2;
  e.two_star_s1 = two_star(N, s1);
  e.two_star_s2 = two_star(N, s2);
  return e;
}

double certify_interpolation(const RadialProfile& profile, int N, double s1,
                             double s2, double s3) {
  if (!profile.grid || profile.grid->dim != N)
    throw std::invalid_argument("certify_interpolation: profile grid dimension mismatch");
  const double theta = interp_theta(N, s1, s2, s3);
  const double n1 = weighted_lp_norm(two_star(N, s1), s1, profile);
  const double n2 = weighted_lp_norm(two_star(N, s2), s2, profile);
  const double n3 = weighted_lp_norm(two_star(N, s3), s3, profile);
  return std::pow(n1, theta) * std::pow(n3, 1.0 - theta) - n2;
}

}  // namespace hssys
