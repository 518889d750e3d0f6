#pragma once

namespace hssys {

struct RadialProfile;

/// Critical Hardy-Sobolev exponent 2(N-s)/(N-2) for N >= 3, s in [0,2].
double two_star(int N, double s);

/// Interpolation exponent theta = (N-s1)(s3-s2) / ((N-s2)(s3-s1)) for
/// 0 <= s1 < s2 < s3 <= 2.  Always lands in (0,1).
double interp_theta(int N, double s1, double s2, double s3);

/// vartheta(s1,s2) = N(s2-s1) / (s2(N-s1)), 0 <= s1 <= s2 <= 2, s2 > 0.
double vartheta(int N, double s1, double s2);

/// varsigma(s1,s2) = (N-s1)(2-s2) / ((N-s2)(2-s1)), 0 <= s1 <= s2 <= 2.
double varsigma(int N, double s1, double s2);

/// Dimension plus the two singularity orders of the coupled system, with
/// the derived critical exponents cached.
struct Exponents {
  int N = 3;
  double s1 = 1.0;
  double s2 = 1.0;
  double two_star_s1 = 4.0;
  double two_star_s2 = 4.0;

  // Validates N >= 3 and s1, s2 in (0,2).
  static Exponents make(int N, double s1, double s2);
};

/// Quadrature certificate for the three-norm interpolation inequality:
/// returns |u|_{2*(s1),s1}^theta * |u|_{2*(s3),s3}^{1-theta} - |u|_{2*(s2),s2}.
/// Nonnegative up to quadrature roundoff for every profile.
double certify_interpolation(const RadialProfile& profile, int N, double s1,
                             double s2, double s3);

}  // namespace hssys
