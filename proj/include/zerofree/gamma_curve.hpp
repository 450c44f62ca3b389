#pragma once

// The explicit boundary arc Gamma of the bounded-orbit region near Lambda = e.
//
// For theta in (0, pi), gamma solves gamma^2 - sin^2 gamma = theta^2 and
//   Lambda^(theta) = (gamma+theta)/sin(gamma) e^{(gamma-theta)cot(gamma)} e^{i theta}
//   c^(theta)      = (gamma-theta)/(gamma+theta) e^{2 theta cot(gamma)}
//   Z^(theta)      = (gamma+theta)/sin(gamma) e^{-2 theta cot(gamma)} e^{-i gamma}
// so that Z^ is a fixed point of H = E_{Lambda^} o E_{Lambda^, c^} with
// multiplier exactly 1.

#include <complex>

#include "zerofree/polygon.hpp"

namespace zerofree {

using Complex = std::complex<double>;

struct GammaPoint {
  double theta = 0.0;
  double gamma = 0.0;
  Complex lambda_hat;
  double c_hat = 1.0;
  Complex z_hat;
};

/// Unique root of gamma^2 - sin^2 gamma = theta^2 in [theta, pi); 0 at theta = 0.
double solve_gamma(double theta);

GammaPoint gamma_point(double theta);

struct ParabolicResiduals {
  double fixed_residual;       // |H(Z^) - Z^|
  double multiplier_residual;  // |H'(Z^) - 1|
};

ParabolicResiduals verify_parabolic(const GammaPoint& p);

struct InvarianceMargins {
  double ineq1_margin;  // 1 - sin(theta)/sin(gamma) e^{(gamma-theta)cot gamma}
  double ineq2_margin;  // (pi/2 - theta) - (gamma+theta) e^{(gamma-theta)cot gamma}
  double spiral_peak;   // max imaginary part of E(I2); equals gamma + theta
};

/// Requires theta and gamma(theta) in (0, pi/2).
InvarianceMargins invariance_margins(double theta);

/// Whether Z^(theta) lies on the segment I2 (collinear within 1e-9, in range).
bool z_hat_on_lower_segment(double theta);

/// Last theta on the grid {resolution, 2*resolution, ...} before the first
/// failure of the invariance inequalities or of Z^ ∈ T_theta.
double theta_max_search(double resolution);

struct TThetaRegion {
  double theta;
  Complex upper_end;  // (theta + gamma) i, end of I1
  Complex lower_end;  // (pi/2 - theta)/sin(gamma) e^{-i gamma}, end of I2
  double truncation_re;
};

/// 3 (|Lambda^| + pi): far to the right of E_{Lambda^}(T_theta).
double default_truncation(double theta);

TThetaRegion t_theta_region(double theta, double truncation_re);

/// Counterclockwise pentagon 0, I2 end, its truncation, I1 truncation, I1 end.
ConvexPolygon t_theta_polygon(double theta, double truncation_re);

}  // namespace zerofree
