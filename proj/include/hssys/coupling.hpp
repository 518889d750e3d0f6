#pragma once

namespace hssys {

/// Parameters (lambda, mu, kappa, alpha, beta) of the coupled system.
/// lambda, mu > 0; kappa != 0; alpha, beta > 1.  In the critical regime
/// alpha + beta equals 2*(s2) of the bound Exponents.
struct CouplingParams {
  double lambda = 1.0;
  double mu = 1.0;
  double kappa = 1.0;
  double alpha = 2.0;
  double beta = 2.0;
};

// Throws std::domain_error on a violated bound, naming it.
void validate(const CouplingParams& p);

/// Best constant kappa(alpha,beta,lambda,mu) = (alpha+beta) (lambda/alpha)^{alpha/(alpha+beta)}
/// (mu/beta)^{beta/(alpha+beta)} in the two-variable Young inequality
///   kappa_best X^{alpha/(alpha+beta)} Y^{beta/(alpha+beta)} <= lambda X + mu Y.
double best_young_constant(double alpha, double beta, double lambda, double mu);

/// Ratio t = (lambda beta / (mu alpha))^{1/(alpha+beta)} at which the pair
/// (u, t u) attains equality in the Young inequality.
double young_extremal_ratio(double alpha, double beta, double lambda, double mu);

/// Threshold -(lambda/alpha)^{alpha/2*(s)} (mu/beta)^{beta/2*(s)}; the
/// constrained functional is positive on all nonzero pairs iff kappa exceeds
/// it.  Requires alpha + beta = two_star_s.
double admissibility_threshold(double alpha, double beta, double lambda,
                               double mu, double two_star_s);

/// Strict comparison against the threshold with a 1e-12 relative guard;
/// kappa equal to the threshold counts as inadmissible.
bool kappa_admissible(const CouplingParams& p, double two_star_s);

}  // namespace hssys
