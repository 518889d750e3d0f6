#include "hssys/regime.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "json.hpp"

namespace hssys {

namespace {

constexpr double kAgreeTol = 1e-10;

bool rel_eq(double a, double b, double tol) {
  return std::abs(a - b) <= tol * std::max(std::abs(a), std::abs(b));
}

// Existence conditions (a1)-(a3) for kappa > 0.  The half-aperture eigenvalue
// entering the beta = 2 (resp. alpha = 2) edge is eta_1 = lambda (eta_2 = mu)
// in the single-exponent case.
bool existence_conditions_hold(const CouplingParams& p, double two_star_s) {
  if (p.lambda > p.mu) {
    if (p.beta > 1.0 && p.beta < 2.0) return true;
    return p.beta == 2.0 && p.kappa > p.lambda / two_star_s;
  }
  if (p.lambda < p.mu) {
    if (p.alpha > 1.0 && p.alpha < 2.0) return true;
    return p.alpha == 2.0 && p.kappa > p.mu / two_star_s;
  }
  const double mn = std::min(p.alpha, p.beta);
  if (mn < 2.0) return true;
  return mn == 2.0 && p.kappa > p.lambda / two_star_s;
}

// Hypotheses (b)+(c) of the N = 3 classification: alpha, beta >= 2 with the
// matching kappa bounds.
bool n3_classification_applies(const CouplingParams& p) {
  const bool b_ok = p.alpha > 2.0 || (p.alpha == 2.0 && p.mu >= 2.0 * p.kappa);
  const bool c_ok = p.beta > 2.0 || (p.beta == 2.0 && p.lambda >= 2.0 * p.kappa);
  return b_ok && c_ok;
}

bool is_degenerate_family_point(const Exponents& e, const CouplingParams& p) {
  if (e.N != 3) return false;
  if (std::abs(e.s1 - 1.0) > 1e-12) return false;
  if (std::abs(p.alpha - 2.0) > 1e-12 || std::abs(p.beta - 2.0) > 1e-12) return false;
  return rel_eq(p.lambda, p.mu, 1e-12) && rel_eq(p.lambda, 2.0 * p.kappa, 1e-12);
}

}  // namespace

const char* to_string(Classification c) {
  switch (c) {
    case Classification::NontrivialGroundState: return "NontrivialGroundState";
    case Classification::SemiTrivialOnly: return "SemiTrivialOnly";
    case Classification::DegenerateFamily: return "DegenerateFamily";
    case Classification::Inadmissible: return "Inadmissible";
    case Classification::Undetermined: return "Undetermined";
  }
  return "Undetermined";
}

RegimeReport classify(const Exponents& exps, const CouplingParams& params) {
  validate(params);
  if (std::abs(exps.s1 - exps.s2) > 1e-14)
    throw std::domain_error("classify: requires s1 = s2");
  if (!(exps.s1 > 0.0 && exps.s1 < 2.0))
    throw std::domain_error("classify: s must lie in (0,2)");
  const double p = exps.two_star_s1;
  if (std::abs(params.alpha + params.beta - p) > 1e-9 * p)
    throw std::domain_error("classify: alpha + beta must equal 2*(s)");

  RegimeReport rep;
  const double max_ratio = std::pow(std::max(params.lambda, params.mu), -2.0 / p);

  if (!kappa_admissible(params, p)) {
    rep.classification = Classification::Inadmissible;
    rep.sharp_ratio = std::numeric_limits<double>::quiet_NaN();
    rep.rule_fired = "inadmissible-kappa-at-or-below-threshold";
    rep.numeric_agrees = true;
    return rep;
  }

  const FiberMap fm{params, p};
  const GMinResult num = minimize_g(fm);
  const bool numeric_endpoint =
      num.location == FiberMin::Zero || num.location == FiberMin::Infinity;
  const bool numeric_at_max_ratio = std::abs(num.g_min - max_ratio) <= kAgreeTol;

  if (params.kappa < 0.0) {
    rep.classification = Classification::SemiTrivialOnly;
    rep.sharp_ratio = max_ratio;
    rep.rule_fired = "semitrivial-negative-kappa";
    rep.numeric_agrees = numeric_endpoint && numeric_at_max_ratio;
    return rep;
  }

  if (existence_conditions_hold(params, p) && num.location == FiberMin::Interior) {
    rep.classification = Classification::NontrivialGroundState;
    rep.sharp_ratio = num.g_min;
    rep.t0 = num.t_star;
    rep.rule_fired = "nontrivial-existence-conditions";
    rep.numeric_agrees = true;
    return rep;
  }

  if (exps.N == 3 && n3_classification_applies(params)) {
    if (is_degenerate_family_point(exps, params)) {
      rep.classification = Classification::DegenerateFamily;
      rep.sharp_ratio = num.g_min;
      rep.t0 = 1.0;  // any t0 > 0 is a witness; pick the symmetric member
      rep.rule_fired = "degenerate-family-point";
      rep.numeric_agrees = num.location == FiberMin::Flat;
      return rep;
    }
    if (numeric_endpoint && numeric_at_max_ratio) {
      rep.classification = Classification::SemiTrivialOnly;
      rep.sharp_ratio = max_ratio;
      rep.rule_fired = "semitrivial-dimension-three-classification";
      rep.numeric_agrees = true;
      return rep;
    }
    // The dimension-three hypotheses hold yet the scan finds a strict
    // interior minimum; report the numeric value and expose the mismatch.
    rep.classification = Classification::Undetermined;
    rep.sharp_ratio = num.g_min;
    if (num.location == FiberMin::Interior) rep.t0 = num.t_star;
    rep.rule_fired = "undetermined-dimension-three-conditions-contradicted";
    rep.numeric_agrees = false;
    return rep;
  }

  rep.classification = Classification::Undetermined;
  rep.sharp_ratio = num.g_min;
  if (num.location == FiberMin::Interior) rep.t0 = num.t_star;
  rep.rule_fired = existence_conditions_hold(params, p)
                       ? "undetermined-existence-conditions-unconfirmed"
                       : "undetermined-numeric-only";
  rep.numeric_agrees = !existence_conditions_hold(params, p);
  return rep;
}

double ground_state_energy(double sharp_ratio, double mu_s, double two_star_s) {
  if (!(sharp_ratio > 0.0) || !(mu_s > 0.0))
    throw std::domain_error("ground_state_energy: inputs must be positive");
  const double S = sharp_ratio * mu_s;
  return (0.5 - 1.0 / two_star_s) * std::pow(S, two_star_s / (two_star_s - 2.0));
}

bool nonexistence_check_s2_ge_s1(const Exponents& exps,
                                 const CouplingParams& params,
                                 bool kappa_small) {
  validate(params);
  if (!(exps.s2 >= exps.s1))
    throw std::domain_error("nonexistence_check_s2_ge_s1: requires s2 >= s1");
  if (std::abs(params.alpha + params.beta - exps.two_star_s2) > 1e-9 * exps.two_star_s2)
    throw std::domain_error("nonexistence_check_s2_ge_s1: alpha + beta must equal 2*(s2)");
  if (params.kappa < 0.0) return true;
  if (!kappa_small) return false;
  const double mn = std::min(params.alpha, params.beta);
  return mn * varsigma(exps.N, exps.s1, exps.s2) > 2.0;
}

std::string to_json(const RegimeReport& report) {
  nlohmann::json j;
  j["classification"] = to_string(report.classification);
  if (std::isnan(report.sharp_ratio))
    j["sharp_ratio"] = nullptr;
  else
    j["sharp_ratio"] = report.sharp_ratio;
  if (report.t0)
    j["t0"] = *report.t0;
  else
    j["t0"] = nullptr;
  j["rule_fired"] = report.rule_fired;
  j["numeric_agrees"] = report.numeric_agrees;
  return j.dump(2);
}

}  // namespace hssys
