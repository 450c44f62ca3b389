#include "zerofree/gamma_curve.hpp"

#include <cmath>

#include "zerofree/cardioid.hpp"
#include "zerofree/error.hpp"

namespace zerofree {

namespace {

constexpr double kHalfPi = 0.5 * kPi;

// gamma - sin(gamma) without cancellation for small gamma.
double gamma_minus_sin(double g) {
  if (g > 0.1) return g - std::sin(g);
  const double g2 = g * g;
  // g^3/3! - g^5/5! + g^7/7! - g^9/9! + g^11/11!
  return g * g2 * (1.0 / 6.0 - g2 * (1.0 / 120.0 - g2 * (1.0 / 5040.0 - g2 * (1.0 / 362880.0 - g2 / 39916800.0))));
}

// gamma^2 - sin^2(gamma) - theta^2
double defining_residual(double g, double theta) {
  return gamma_minus_sin(g) * (g + std::sin(g)) - theta * theta;
}

}  // namespace

double solve_gamma(double theta) {
  require(theta >= 0.0 && theta < kPi, ErrorCode::Domain, "theta must lie in [0, pi)");
  if (theta == 0.0) return 0.0;
  double lo = theta;
  double hi = kPi - 1e-12;
  while (hi - lo > 1e-14) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (defining_residual(mid, theta) < 0.0)
      lo = mid;
    else
      hi = mid;
  }
  double g = 0.5 * (lo + hi);
  for (int step = 0; step < 2; ++step) {
    // d/dg (g^2 - sin^2 g) = 2g - sin(2g)
    const double slope = 2.0 * g - std::sin(2.0 * g);
    if (slope <= 0.0) break;
    const double next = g - defining_residual(g, theta) / slope;
    if (next >= lo && next <= hi) g = next;
  }
  return g;
}

GammaPoint gamma_point(double theta) {
  GammaPoint p;
  p.theta = theta;
  p.gamma = solve_gamma(theta);
  if (theta == 0.0) {
    p.lambda_hat = Complex(kE, 0.0);
    p.c_hat = 1.0;
    p.z_hat = Complex(1.0, 0.0);
    return p;
  }
  const double g = p.gamma;
  const double cot = std::cos(g) / std::sin(g);
  const double radius = (g + theta) / std::sin(g);
  p.lambda_hat = radius * std::exp((g - theta) * cot) * std::polar(1.0, theta);
  p.c_hat = (g - theta) / (g + theta) * std::exp(2.0 * theta * cot);
  p.z_hat = radius * std::exp(-2.0 * theta * cot) * std::polar(1.0, -g);
  return p;
}

ParabolicResiduals verify_parabolic(const GammaPoint& p) {
  const Complex inner = p.lambda_hat * std::exp(-p.c_hat * p.z_hat);  // E_{Lambda,c}(Z)
  const Complex h = p.lambda_hat * std::exp(-inner);
  const Complex dh = p.c_hat * inner * h;
  return {std::abs(h - p.z_hat), std::abs(dh - 1.0)};
}

InvarianceMargins invariance_margins(double theta) {
  require(theta > 0.0 && theta < kHalfPi, ErrorCode::Domain, "theta must lie in (0, pi/2)");
  const double g = solve_gamma(theta);
  require(g < kHalfPi, ErrorCode::Domain, "gamma(theta) must lie below pi/2");
  const double cot = std::cos(g) / std::sin(g);
  const double growth = std::exp((g - theta) * cot);
  InvarianceMargins m;
  m.ineq1_margin = 1.0 - std::sin(theta) / std::sin(g) * growth;
  m.ineq2_margin = (kHalfPi - theta) - (g + theta) * growth;
  const double t_star = (g - theta) / (kHalfPi - theta);
  const double modulus = (g + theta) / std::sin(g) * growth;
  m.spiral_peak = modulus * std::exp(t_star * (theta - kHalfPi) * cot) * std::sin(theta + t_star * (kHalfPi - theta));
  return m;
}

bool z_hat_on_lower_segment(double theta) {
  const GammaPoint p = gamma_point(theta);
  // rotate so that I2 lies on the positive real axis
  const Complex along = p.z_hat * std::polar(1.0, p.gamma);
  const double length = (kHalfPi - theta) / std::sin(p.gamma);
  const bool collinear = std::abs(along.imag()) <= 1e-9 * std::abs(p.z_hat);
  return collinear && along.real() >= 0.0 && along.real() <= length;
}

double theta_max_search(double resolution) {
  require(resolution > 0.0, ErrorCode::InvalidArgument, "resolution must be positive");
  double last = 0.0;
  for (long k = 1;; ++k) {
    const double theta = resolution * static_cast<double>(k);
    if (theta >= kHalfPi || solve_gamma(theta) >= kHalfPi) break;
    const InvarianceMargins m = invariance_margins(theta);
    if (m.ineq1_margin < 0.0 || m.ineq2_margin < 0.0 || !z_hat_on_lower_segment(theta)) break;
    last = theta;
  }
  return last;
}

double default_truncation(double theta) { return 3.0 * (std::abs(gamma_point(theta).lambda_hat) + kPi); }

TThetaRegion t_theta_region(double theta, double truncation_re) {
  require(theta > 0.0 && theta < kHalfPi, ErrorCode::Domain, "theta must lie in (0, pi/2)");
  const double g = solve_gamma(theta);
  require(g < kHalfPi, ErrorCode::Domain, "gamma(theta) must lie below pi/2");
  TThetaRegion r;
  r.theta = theta;
  r.upper_end = Complex(0.0, theta + g);
  r.lower_end = (kHalfPi - theta) / std::sin(g) * std::polar(1.0, -g);
  r.truncation_re = truncation_re;
  require(truncation_re > std::max(0.0, r.lower_end.real()), ErrorCode::Domain,
          "truncation must lie right of the segment endpoints");
  return r;
}

ConvexPolygon t_theta_polygon(double theta, double truncation_re) {
  const TThetaRegion r = t_theta_region(theta, truncation_re);
  return ConvexPolygon::from_ccw({Complex(0.0, 0.0), r.lower_end, Complex(truncation_re, r.lower_end.imag()),
                                  Complex(truncation_re, r.upper_end.imag()), r.upper_end});
}

}  // namespace zerofree
