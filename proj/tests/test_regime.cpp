#include <cmath>
#include <numbers>
#include <stdexcept>

#include "doctest.h"
#include "hssys/regime.hpp"
#include "json.hpp"
#include "oracles.hpp"

using namespace hssys;

namespace {
const Exponents kE31 = Exponents::make(3, 1.0, 1.0);
}

TEST_CASE("classify: degenerate family point") {
  const auto rep = classify(kE31, {2.0, 2.0, 1.0, 2.0, 2.0});
  CHECK(rep.classification == Classification::DegenerateFamily);
  CHECK(rep.sharp_ratio == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-13));
  CHECK(rep.numeric_agrees);
}

TEST_CASE("classify: endpoint tie goes semi-trivial under the N=3 ladder") {
  const auto rep = classify(kE31, {3.0, 3.0, 1.0, 2.0, 2.0});
  CHECK(rep.classification == Classification::SemiTrivialOnly);
  CHECK(rep.sharp_ratio == doctest::Approx(std::pow(3.0, -0.5)).epsilon(1e-14));
  CHECK(rep.numeric_agrees);
}

TEST_CASE("classify: nontrivial ground state with interior witness") {
  const auto rep = classify(kE31, {1.0, 1.0, 1.0, 2.0, 2.0});
  CHECK(rep.classification == Classification::NontrivialGroundState);
  REQUIRE(rep.t0.has_value());
  CHECK(*rep.t0 == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(rep.sharp_ratio == doctest::Approx(2.0 / std::sqrt(6.0)).epsilon(1e-13));
  CHECK(rep.numeric_agrees);
}

TEST_CASE("classify: inadmissible and negative-kappa rungs") {
  const auto bad = classify(kE31, {2.0, 2.0, -5.0, 2.0, 2.0});
  CHECK(bad.classification == Classification::Inadmissible);
  CHECK(std::isnan(bad.sharp_ratio));

  const auto semi = classify(kE31, {2.0, 2.0, -0.5, 2.0, 2.0});
  CHECK(semi.classification == Classification::SemiTrivialOnly);
  CHECK(semi.sharp_ratio == doctest::Approx(std::pow(2.0, -0.5)).epsilon(1e-14));
  CHECK(semi.numeric_agrees);
}

TEST_CASE("classify preconditions") {
  CHECK_THROWS_AS(classify(Exponents::make(3, 0.5, 1.0), {1, 1, 1, 2, 2}),
                  std::domain_error);
  CHECK_THROWS_AS(classify(kE31, {1.0, 1.0, 1.0, 2.0, 2.5}), std::domain_error);
}

TEST_CASE("classify sharp_ratio always matches the numeric scan") {
  oracles::Rng rng(61);
  for (int k = 0; k < 60; ++k) {
    const double s = rng.uniform(0.3, 1.7);
    const Exponents e = Exponents::make(3, s, s);
    const double p = e.two_star_s1;
    CouplingParams cp;
    cp.lambda = rng.uniform(0.4, 3.0);
    cp.mu = rng.uniform(0.4, 3.0);
    cp.beta = rng.uniform(1.1, p - 1.1);
    cp.alpha = p - cp.beta;
    cp.kappa = rng.uniform(0.1, 2.0);
    const auto rep = classify(e, cp);
    const GMinResult num = minimize_g({cp, p});
    CHECK(std::abs(rep.sharp_ratio - num.g_min) <= 1e-12 * num.g_min);
  }
}

TEST_CASE("classify is scale-consistent") {
  oracles::Rng rng(67);
  for (int k = 0; k < 30; ++k) {
    CouplingParams cp{rng.uniform(0.4, 2.0), rng.uniform(0.4, 2.0), rng.uniform(0.2, 1.5),
                      2.0, 2.0};
    const double c = rng.uniform(0.5, 4.0);
    const auto base = classify(kE31, cp);
    CouplingParams scaled = cp;
    scaled.lambda *= c;
    scaled.mu *= c;
    scaled.kappa *= c;
    const auto rep = classify(kE31, scaled);
    CHECK(rep.classification == base.classification);
    CHECK(rep.sharp_ratio ==
          doctest::Approx(base.sharp_ratio * std::pow(c, -0.5)).epsilon(1e-10));
    if (base.t0 && rep.t0) CHECK(*rep.t0 == doctest::Approx(*base.t0).epsilon(1e-8));
  }
}

TEST_CASE("ground state energy formula and scalar reduction") {
  CHECK(ground_state_energy(1.0, 1.0, 4.0) == doctest::Approx(0.25).epsilon(1e-15));

  // sharp_ratio = lambda^{-2/p} reduces to the scalar least energy m_lambda
  oracles::Rng rng(71);
  for (int k = 0; k < 20; ++k) {
    const double p = rng.uniform(2.5, 6.0);
    const double lam = rng.uniform(0.3, 4.0);
    const double mu_s = rng.uniform(0.5, 5.0);
    const double expected = (0.5 - 1.0 / p) * std::pow(mu_s, p / (p - 2.0)) *
                            std::pow(lam, -2.0 / (p - 2.0));
    CHECK(ground_state_energy(std::pow(lam, -2.0 / p), mu_s, p) ==
          doctest::Approx(expected).epsilon(1e-13));
  }

  // N=3, s=1, lambda=1: m_lambda = 2 pi / 3 at mu_s = 2 sqrt(2 pi / 3)
  const double mu_s = 2.0 * std::sqrt(2.0 * std::numbers::pi / 3.0);
  CHECK(ground_state_energy(1.0, mu_s, 4.0) ==
        doctest::Approx(2.0 * std::numbers::pi / 3.0).epsilon(1e-14));
}

TEST_CASE("nonexistence hypotheses for s2 >= s1") {
  const Exponents e = Exponents::make(3, 0.5, 1.0);  // 2*(s2) = 4
  CouplingParams cp{1.0, 1.0, -0.1, 2.0, 2.0};
  CHECK(nonexistence_check_s2_ge_s1(e, cp, false));

  // kappa > 0 without the smallness flag: never
  cp.kappa = 0.1;
  CHECK_FALSE(nonexistence_check_s2_ge_s1(e, cp, false));

  // min(alpha,beta) * varsigma = 1.5 fails the > 2 test
  // (N=3, s1=0.5, s2=1: varsigma = 2.5/3, min * varsigma = 2 * 2.5/3 < 2)
  CHECK_FALSE(nonexistence_check_s2_ge_s1(e, cp, true));

  // boundary: N=3, s1=s2=1, alpha=beta=2 gives exactly 2, not > 2
  CHECK_FALSE(nonexistence_check_s2_ge_s1(kE31, cp, true));

  // a passing kappa > 0 case: alpha, beta heavy and s2 close to s1
  const Exponents e2 = Exponents::make(3, 0.2, 0.25);
  CouplingParams cp2{1.0, 1.0, 0.05, 2.75, 2.75};
  CHECK(nonexistence_check_s2_ge_s1(e2, cp2, true));
}

TEST_CASE("report serializes to the named JSON fields") {
  const auto rep = classify(kE31, {1.0, 1.0, 1.0, 2.0, 2.0});
  const auto j = nlohmann::json::parse(to_json(rep));
  CHECK(j["classification"] == "NontrivialGroundState");
  CHECK(j["sharp_ratio"].get<double>() == doctest::Approx(2.0 / std::sqrt(6.0)));
  CHECK(j["t0"].get<double>() == doctest::Approx(1.0));
  CHECK(j.contains("rule_fired"));
  CHECK(j["numeric_agrees"].get<bool>());
}
