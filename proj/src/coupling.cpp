#include "hssys/coupling.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace hssys {

void validate(const CouplingParams& p) {
  if (!(p.lambda > 0.0)) throw std::domain_error("coupling: lambda must be > 0");
  if (!(p.mu > 0.0)) throw std::domain_error("coupling: mu must be > 0");
  if (p.kappa == 0.0) throw std::domain_error("coupling: kappa must be nonzero");
  if (!(p.alpha > 1.0)) throw std::domain_error("coupling: alpha must be > 1");
  if (!(p.beta > 1.0)) throw std::domain_error("coupling: beta must be > 1");
}

double best_young_constant(double alpha, double beta, double lambda, double mu) {
  if (!(alpha > 0.0 && beta > 0.0 && lambda > 0.0 && mu > 0.0))
    throw std::domain_error("best_young_constant: all arguments must be positive");
  const double sum = alpha + beta;
  return sum * std::pow(lambda / alpha, alpha / sum) * std::pow(mu / beta, beta / sum);
}

double young_extremal_ratio(double alpha, double beta, double lambda, double mu) {
  if (!(alpha > 0.0 && beta > 0.0 && lambda > 0.0 && mu > 0.0))
    throw std::domain_error("young_extremal_ratio: all arguments must be positive");
  return std::pow(lambda * beta / (mu * alpha), 1.0 / (alpha + beta));
}

double admissibility_threshold(double alpha, double beta, double lambda,
                               double mu, double two_star_s) {
  if (!(alpha > 0.0 && beta > 0.0 && lambda > 0.0 && mu > 0.0))
    throw std::domain_error("admissibility_threshold: parameters must be positive");
  if (std::abs(alpha + beta - two_star_s) > 1e-9 * two_star_s)
    throw std::domain_error("admissibility_threshold: alpha + beta must equal 2*(s)");
  return -std::pow(lambda / alpha, alpha / two_star_s) *
         std::pow(mu / beta, beta / two_star_s);
}

bool kappa_admissible(const CouplingParams& p, double two_star_s) {
  const double thr = admissibility_threshold(p.alpha, p.beta, p.lambda, p.mu, two_star_s);
  // Borderline kappa == threshold counts as inadmissible.
  return p.kappa > thr + 1e-12 * std::abs(thr);
}

}  // namespace hssys
