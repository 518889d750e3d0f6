#include "hssys/fiber.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>
#include <vector>

namespace hssys {

namespace {

constexpr double kScanLo = 1e-8;
constexpr double kScanHi = 1e8;
constexpr int kScanPoints = 2048;
// Extension guard: keeps t^p and t^2 finite for p <= 6.
constexpr double kHardLo = 1e-45;
constexpr double kHardHi = 1e45;

int sign_of(double x) { return (x > 0.0) - (x < 0.0); }

}  // namespace

double FiberMap::g(double t) const {
  if (!(t >= 0.0)) throw std::domain_error("FiberMap::g: t must be >= 0");
  const auto& p = params;
  const double den = p.lambda + p.mu * std::pow(t, two_star_s) +
                     two_star_s * p.kappa * std::pow(t, p.beta);
  if (!(den > 0.0))
    throw std::domain_error("FiberMap::g: nonpositive denominator (inadmissible kappa)");
  return (1.0 + t * t) * std::pow(den, -2.0 / two_star_s);
}

double FiberMap::h(double t) const {
  const auto& p = params;
  return p.mu * std::pow(t, two_star_s - 2.0) - p.kappa * p.alpha * std::pow(t, p.beta) +
         p.kappa * p.beta * std::pow(t, p.beta - 2.0) - p.lambda;
}

double FiberMap::g_at_zero() const { return std::pow(params.lambda, -2.0 / two_star_s); }

double FiberMap::g_at_infinity() const { return std::pow(params.mu, -2.0 / two_star_s); }

double FiberMap::g_prime_product_form(double t) const {
  const auto& p = params;
  const double den = p.lambda + p.mu * std::pow(t, two_star_s) +
                     two_star_s * p.kappa * std::pow(t, p.beta);
  return -2.0 * t * std::pow(den, -2.0 / two_star_s - 1.0) * h(t);
}

namespace {

// Sign of h as t -> 0+ / t -> +inf, from the dominant exponent.  Exponents of
// h are {p-2, beta, beta-2, 0}; the smallest wins at 0+, the largest at +inf.
int h_sign_at_zero(const FiberMap& fm) {
  const auto& p = fm.params;
  const double pm2 = fm.two_star_s - 2.0;
  const double lo = std::min({pm2, p.beta, p.beta - 2.0, 0.0});
  double coeff = 0.0;
  if (std::abs(pm2 - lo) < 1e-14) coeff += p.mu;
  if (std::abs(p.beta - lo) < 1e-14) coeff += -p.kappa * p.alpha;
  if (std::abs(p.beta - 2.0 - lo) < 1e-14) coeff += p.kappa * p.beta;
  if (std::abs(lo) < 1e-14) coeff += -p.lambda;
  return sign_of(coeff);
}

int h_sign_at_infinity(const FiberMap& fm) {
  const auto& p = fm.params;
  const double pm2 = fm.two_star_s - 2.0;
  const double hi = std::max({pm2, p.beta, p.beta - 2.0, 0.0});
  double coeff = 0.0;
  if (std::abs(pm2 - hi) < 1e-14) coeff += p.mu;
  if (std::abs(p.beta - hi) < 1e-14) coeff += -p.kappa * p.alpha;
  if (std::abs(p.beta - 2.0 - hi) < 1e-14) coeff += p.kappa * p.beta;
  if (std::abs(hi) < 1e-14) coeff += -p.lambda;
  return sign_of(coeff);
}

// Bisection in log t down to 1e-14 relative bracket width.
double polish_h_root(const FiberMap& fm, double lo, double hi, double h_lo) {
  for (int it = 0; it < 200 && (hi - lo) > 1e-14 * hi; ++it) {
    const double mid = std::sqrt(lo * hi);
    const double hm = fm.h(mid);
    if (hm == 0.0) return mid;
    if (sign_of(hm) == sign_of(h_lo))
      lo = mid;
    else
      hi = mid;
  }
  return std::sqrt(lo * hi);
}

}  // namespace

GMinResult minimize_g(const FiberMap& fm) {
  const auto& p = fm.params;
  const double g0 = fm.g_at_zero();
  const double ginf = fm.g_at_infinity();

  // Scan window; widen when the boundary sign disagrees with the analytic
  // limit so no crossing hides beyond the default range.
  double lo = kScanLo, hi = kScanHi;
  const int s0 = h_sign_at_zero(fm);
  const int sinf = h_sign_at_infinity(fm);
  while (lo > kHardLo && sign_of(fm.h(lo)) != s0 && s0 != 0) lo *= 1e-4;
  while (hi < kHardHi && sign_of(fm.h(hi)) != sinf && sinf != 0) hi *= 1e4;

  const double step = std::log(hi / lo) / (kScanPoints - 1);
  std::vector<double> ts(kScanPoints), hs(kScanPoints);
  double habs_max = 0.0;
  for (int i = 0; i < kScanPoints; ++i) {
    ts[i] = lo * std::exp(i * step);
    hs[i] = fm.h(ts[i]);
    habs_max = std::max(habs_max, std::abs(hs[i]));
  }

  const double h_scale = p.lambda + p.mu + std::abs(p.kappa) * (p.alpha + p.beta);
  if (habs_max <= 1e-12 * h_scale) {
    // g is constant: the degenerate family.
    return {FiberMin::Flat, 1.0, fm.g(1.0), true};
  }

  // Interior candidates: every sign change of h, bisection-polished.
  bool has_interior = false;
  double best_t = 0.0, best_g = 0.0;
  auto consider = [&](double t) {
    const double gt = fm.g(t);
    if (!has_interior || gt < best_g) {
      has_interior = true;
      best_g = gt;
      best_t = t;
    }
  };
  for (int i = 0; i + 1 < kScanPoints; ++i) {
    if (hs[i] == 0.0) consider(ts[i]);
    if (sign_of(hs[i]) * sign_of(hs[i + 1]) < 0)
      consider(polish_h_root(fm, ts[i], ts[i + 1], hs[i]));
  }
  if (hs.back() == 0.0) consider(ts.back());

  const double endpoint_min = std::min(g0, ginf);
  const double tie_tol = 1e-10;

  GMinResult res;
  if (has_interior && best_g < endpoint_min - tie_tol) {
    res.location = FiberMin::Interior;
    res.t_star = best_t;
    res.g_min = best_g;
    res.endpoint_tie = false;
    return res;
  }
  res.location = (g0 <= ginf) ? FiberMin::Zero : FiberMin::Infinity;
  res.t_star = 0.0;
  res.g_min = endpoint_min;
  res.endpoint_tie = has_interior && std::abs(best_g - endpoint_min) <= tie_tol;
  return res;
}

double nehari_project(const NehariCoefficients& nc) {
  if (!(nc.a > 0.0) || !(nc.b > 0.0) || !(nc.c >= 0.0))
    throw std::domain_error("nehari_project: need a > 0, b > 0, c >= 0");
  const double e1 = nc.two_star_s1 - 2.0;
  const double e2 = nc.two_star_s2 - 2.0;
  if (!(e1 > 0.0) || !(e2 > 0.0))
    throw std::domain_error("nehari_project: exponents must exceed 2");

  auto F = [&](double t) {
    return nc.a - nc.b * std::pow(t, e1) -
           nc.two_star_s2 * nc.kappa * nc.c * std::pow(t, e2);
  };

  // F(0+) = a > 0; expand upward until F turns negative.
  double lo = 1e-8, hi = 1e8;
  while (F(lo) <= 0.0 && lo > kHardLo) lo *= 1e-2;
  while (F(hi) > 0.0 && hi < kHardHi) hi *= 1e2;
  if (!(F(lo) > 0.0) || !(F(hi) <= 0.0))
    throw std::domain_error("nehari_project: no sign change in bracket (precondition violated)");

  const double tol = 1e-12 * nc.a;
  double mid = std::sqrt(lo * hi);
  for (int it = 0; it < 400; ++it) {
    mid = std::sqrt(lo * hi);
    const double fm = F(mid);
    if (std::abs(fm) < tol) return mid;
    if (fm > 0.0)
      lo = mid;
    else
      hi = mid;
    if (hi - lo <= 1e-16 * hi) break;
  }
  if (std::abs(F(mid)) < 16.0 * tol) return mid;
  throw std::runtime_error("nehari_project: bisection failed to reach residual tolerance");
}

double fiber_energy(const NehariCoefficients& nc, double t) {
  const double c2 = 0.5 - 1.0 / nc.two_star_s2;
  const double c1 = 1.0 / nc.two_star_s2 - 1.0 / nc.two_star_s1;
  return c2 * nc.a * t * t + c1 * nc.b * std::pow(t, nc.two_star_s1);
}

void write_fiber_csv(std::ostream& os, const FiberMap& fm, double t_min,
                     double t_max, int count) {
  if (!(t_min > 0.0) || !(t_max > t_min) || count < 2)
    throw std::invalid_argument("write_fiber_csv: bad sampling range");
  char buf[128];
  os << "t,g,h\n";
  const double step = std::log(t_max / t_min) / (count - 1);
  for (int i = 0; i < count; ++i) {
    const double t = t_min * std::exp(i * step);
    std::snprintf(buf, sizeof(buf), "%.17g,%.17g,%.17g\n", t, fm.g(t), fm.h(t));
    os << buf;
  }
}

}  // namespace hssys
