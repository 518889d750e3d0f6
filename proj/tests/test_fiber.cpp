#include <cmath>
#include <sstream>
#include <stdexcept>

#include "doctest.h"
#include "hssys/fiber.hpp"
#include "oracles.hpp"

using namespace hssys;

TEST_CASE("g values: degenerate constancy, endpoint formula, direct point") {
  // lambda = mu = 2 kappa makes g identically 1/sqrt(lambda) (p = 4).
  FiberMap degen{{2.0, 2.0, 1.0, 2.0, 2.0}, 4.0};
  for (double t : {0.0, 0.3, 1.0, 7.0, 250.0})
    CHECK(degen.g(t) == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-14));

  FiberMap f0{{4.0, 1.0, 1.0, 2.0, 2.0}, 4.0};
  CHECK(f0.g(0.0) == doctest::Approx(0.5).epsilon(1e-15));

  FiberMap f1{{1.0, 1.0, 1.0, 2.0, 2.0}, 4.0};
  CHECK(f1.g(1.0) == doctest::Approx(2.0 / std::sqrt(6.0)).epsilon(1e-14));
}

TEST_CASE("h simplifies to the expected quadratics") {
  FiberMap a{{3.0, 3.0, 1.0, 2.0, 2.0}, 4.0};  // h(t) = t^2 - 1
  CHECK(a.h(1.0) == doctest::Approx(0.0));
  CHECK(a.h(2.0) == doctest::Approx(3.0).epsilon(1e-14));
  CHECK(a.h(0.5) == doctest::Approx(-0.75).epsilon(1e-14));

  FiberMap b{{1.0, 1.0, 1.0, 2.0, 2.0}, 4.0};  // h(t) = 1 - t^2
  CHECK(b.h(1.0) == doctest::Approx(0.0));
  CHECK(b.h(2.0) == doctest::Approx(-3.0).epsilon(1e-14));
}

TEST_CASE("finite-difference derivative matches the product form") {
  oracles::Rng rng(41);
  for (int k = 0; k < 20; ++k) {
    const double p = rng.uniform(2.5, 6.0);
    const double beta = rng.uniform(1.1, p - 1.1);
    FiberMap fm{{rng.uniform(0.5, 3.0), rng.uniform(0.5, 3.0), rng.uniform(0.2, 2.0),
                 p - beta, beta},
                p};
    for (int j = 0; j < 64; ++j) {
      const double t = std::exp(std::log(0.1) + (std::log(10.0) - std::log(0.1)) * j / 63.0);
      const double d = t * 1e-6;
      const double fd = (fm.g(t + d) - fm.g(t - d)) / (2.0 * d);
      const double an = fm.g_prime_product_form(t);
      CHECK(std::abs(fd - an) <= 1e-6 * std::max(std::abs(an), fm.g(t)));
    }
  }
}

TEST_CASE("minimize_g: interior, endpoint tie, flat family") {
  // interior minimum at t = 1
  GMinResult r1 = minimize_g({{1.0, 1.0, 1.0, 2.0, 2.0}, 4.0});
  CHECK(r1.location == FiberMin::Interior);
  CHECK(r1.t_star == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(r1.g_min == doctest::Approx(2.0 / std::sqrt(6.0)).epsilon(1e-13));

  // endpoints tie at 3^{-1/2}; interior t = 1 is a local max (g = 2/sqrt(10))
  GMinResult r2 = minimize_g({{3.0, 3.0, 1.0, 2.0, 2.0}, 4.0});
  CHECK((r2.location == FiberMin::Zero || r2.location == FiberMin::Infinity));
  CHECK(r2.g_min == doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-14));

  // degenerate family: g constant
  GMinResult r3 = minimize_g({{2.0, 2.0, 1.0, 2.0, 2.0}, 4.0});
  CHECK(r3.location == FiberMin::Flat);
  CHECK(r3.g_min == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-14));
}

TEST_CASE("minimize_g never exceeds the endpoint values; endpoint limits") {
  oracles::Rng rng(43);
  for (int k = 0; k < 60; ++k) {
    const double p = rng.uniform(2.5, 6.0);
    const double beta = rng.uniform(1.1, p - 1.1);
    FiberMap fm{{rng.uniform(0.5, 3.0), rng.uniform(0.5, 3.0), rng.uniform(0.2, 2.0),
                 p - beta, beta},
                p};
    const GMinResult r = minimize_g(fm);
    CHECK(r.g_min <= std::min(fm.g_at_zero(), fm.g_at_infinity()) + 1e-12);
  }

  FiberMap fm{{1.7, 0.9, 1.3, 2.0, 2.0}, 4.0};
  CHECK(fm.g(0.0) * std::pow(1.7, 0.5) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(fm.g(1e8) * std::pow(0.9, 0.5) == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("nehari projection: closed forms") {
  // 2 = t^2 + t  =>  t = 1  (powers p1-2 = 2, p2-2 = 1; 2*(s2) kappa c = 1)
  NehariCoefficients nc1{2.0, 1.0, 1.0 / 3.0, 4.0, 3.0, 1.0};
  CHECK(nehari_project(nc1) == doctest::Approx(1.0).epsilon(1e-10));

  // c = 0: t = (a/b)^{1/2}
  NehariCoefficients nc2{2.0, 1.0, 0.0, 4.0, 4.0, 1.0};
  CHECK(nehari_project(nc2) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-10));

  // single power: t = (a / (b + p kappa c))^{1/2}
  NehariCoefficients nc3{3.0, 1.0, 0.5, 4.0, 4.0, 1.0};
  CHECK(nehari_project(nc3) ==
        doctest::Approx(std::sqrt(3.0 / (1.0 + 4.0 * 0.5))).epsilon(1e-10));
}

TEST_CASE("nehari projection: uniqueness and residual bound for kappa > 0") {
  oracles::Rng rng(47);
  for (int k = 0; k < 100; ++k) {
    NehariCoefficients nc;
    nc.a = rng.log_uniform(0.1, 10.0);
    nc.b = rng.log_uniform(0.1, 10.0);
    nc.c = rng.log_uniform(0.1, 10.0);
    nc.kappa = rng.log_uniform(0.1, 10.0);
    nc.two_star_s1 = rng.uniform(2.5, 6.0);
    nc.two_star_s2 = rng.uniform(2.5, nc.two_star_s1);
    const double t = nehari_project(nc);

    const auto F = [&](double x) {
      return nc.a - nc.b * std::pow(x, nc.two_star_s1 - 2.0) -
             nc.two_star_s2 * nc.kappa * nc.c * std::pow(x, nc.two_star_s2 - 2.0);
    };
    CHECK(std::abs(F(t)) < 1e-12 * nc.a);

    int sign_changes = 0;
    double prev = F(1e-8);
    for (int j = 1; j < 512; ++j) {
      const double x = 1e-8 * std::pow(1e16, j / 511.0);
      const double cur = F(x);
      if ((prev > 0) != (cur > 0)) ++sign_changes;
      prev = cur;
    }
    CHECK(sign_changes == 1);
  }
}

TEST_CASE("nehari projection precondition violation is detected") {
  // kappa < 0 large enough that b + 2*(s2) kappa c < 0 and F has no root
  NehariCoefficients nc{1.0, 1.0, 1.0, 3.0, 4.0, -2.0};
  CHECK_THROWS_AS(nehari_project(nc), std::domain_error);
}

TEST_CASE("fiber energy: two-term form and scalar reduction") {
  // s1 = s2, p = 4, a = 2, b + p kappa c = 2  =>  t = 1, Phi = 1/2
  NehariCoefficients nc{2.0, 1.0, 0.25, 4.0, 4.0, 1.0};
  const double t = nehari_project(nc);
  CHECK(t == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(fiber_energy(nc, t) == doctest::Approx(0.5).epsilon(1e-10));

  // c = 0 reduces to the scalar on-manifold energy (1/2 - 1/p1) b t^{p1}
  oracles::Rng rng(53);
  for (int k = 0; k < 30; ++k) {
    NehariCoefficients sc;
    sc.a = rng.log_uniform(0.5, 2.0);
    sc.b = rng.log_uniform(0.5, 2.0);
    sc.c = 0.0;
    sc.kappa = 1.0;
    sc.two_star_s1 = rng.uniform(3.0, 6.0);
    sc.two_star_s2 = rng.uniform(3.0, 6.0);
    const double tp = nehari_project(sc);
    const double direct = 0.5 * sc.a * tp * tp -
                          sc.b * std::pow(tp, sc.two_star_s1) / sc.two_star_s1;
    CHECK(fiber_energy(sc, tp) == doctest::Approx(direct).epsilon(1e-12));
  }
}

TEST_CASE("projected energy is non-decreasing as the coupling term shrinks") {
  // c_eps decreases with eps; the projected energy must not decrease.
  NehariCoefficients nc{2.0, 1.5, 0.0, 5.0, 3.5, 0.8};
  double prev_energy = -1.0;
  for (double c : {0.9, 0.7, 0.5, 0.3, 0.1, 0.02}) {
    nc.c = c;
    const double t = nehari_project(nc);
    const double e = fiber_energy(nc, t);
    CHECK(e >= prev_energy - 1e-12);
    prev_energy = e;
  }
}

TEST_CASE("fiber CSV sampler emits t,g,h") {
  FiberMap fm{{1.0, 1.0, 1.0, 2.0, 2.0}, 4.0};
  std::stringstream ss;
  write_fiber_csv(ss, fm, 0.1, 10.0, 16);
  std::string header;
  std::getline(ss, header);
  CHECK(header == "t,g,h");
  int rows = 0;
  std::string line;
  while (std::getline(ss, line))
    if (!line.empty()) ++rows;
  CHECK(rows == 16);
}
