#pragma once

#include <optional>
#include <string>

#include "hssys/coupling.hpp"
#include "hssys/exponents.hpp"
#include "hssys/fiber.hpp"

namespace hssys {

enum class Classification {
  NontrivialGroundState,
  SemiTrivialOnly,
  DegenerateFamily,
  Inadmissible,
  Undetermined,
};

const char* to_string(Classification c);

/// Classification of the extremals of S_{alpha,beta,lambda,mu} together with
/// the dimensionless sharp ratio inf g (so S = sharp_ratio * mu_s) and, when
/// one exists, the fiber witness t0.
struct RegimeReport {
  Classification classification = Classification::Undetermined;
  double sharp_ratio = 0.0;  // NaN when Inadmissible
  std::optional<double> t0;
  std::string rule_fired;
  bool numeric_agrees = true;
};

/// Decision ladder for s1 = s2 = s, alpha + beta = 2*(s):
///   1. kappa at or below the admissibility threshold     -> Inadmissible
///   2. admissible kappa < 0                               -> SemiTrivialOnly
///   3. kappa > 0 under the existence conditions, numerically confirmed by an
///      interior strict minimum of g                       -> NontrivialGroundState
///   4. N = 3 classification (alpha, beta >= 2 with the matching kappa bounds):
///      the exact parameter point s=1, alpha=beta=2, lambda=mu=2kappa is the
///      degenerate family; otherwise semi-trivial with equality.
///   5. otherwise Undetermined, carrying the numeric verdict.
/// The existence conditions are advisory: rung 3 only fires when the g-scan
/// agrees, and the numeric scan is authoritative for sharp_ratio.
RegimeReport classify(const Exponents& exps, const CouplingParams& params);

/// Ground-state energy (1/2 - 1/2*(s)) (sharp_ratio * mu_s)^{2*(s)/(2*(s)-2)}.
double ground_state_energy(double sharp_ratio, double mu_s, double two_star_s);

/// Hypothesis test for the s2 >= s1 nonexistence result: true when kappa < 0,
/// or when kappa > 0 is flagged small by the caller and
/// min(alpha,beta) * varsigma(s1,s2) > 2.  No explicit smallness bound for
/// kappa is available, so the flag is never inferred here.
bool nonexistence_check_s2_ge_s1(const Exponents& exps,
                                 const CouplingParams& params,
                                 bool kappa_small);

std::string to_json(const RegimeReport& report);

}  // namespace hssys
