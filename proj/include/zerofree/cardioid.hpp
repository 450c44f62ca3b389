#pragma once

// Closed-form geometry of the degree-d cardioids C_d, their limit C_inf, the
// fixed-point correspondence Lambda = -a e^{-a}, and the classical zero-free
// disks.

#include <complex>
#include <optional>
#include <vector>

namespace zerofree {

using Complex = std::complex<double>;

inline constexpr double kE = 2.718281828459045235360287;
inline constexpr double kInvE = 0.367879441171442321595524;
inline constexpr double kPi = 3.141592653589793238462643;

/// Degree of a cardioid: finite d >= 2, or the d -> infinity limit.
class CardioidSpec {
 public:
  static CardioidSpec infinite() { return CardioidSpec{}; }
  static CardioidSpec finite(int degree);

  bool is_infinite() const { return !degree_.has_value(); }
  /// Only meaningful for finite specs.
  int degree() const { return degree_.value(); }

 private:
  CardioidSpec() = default;
  std::optional<int> degree_;
};

/// Discretized closed or open curve in the plane.
struct SampledBoundary {
  std::vector<Complex> points;
  bool closed = true;
};

struct FixedPointData {
  Complex parameter;
  Complex point;
  Complex multiplier;  // E_Lambda'(p) = -p
};

/// Parameter value on the boundary (|u| = 1) of the cardioid at u.
Complex cardioid_point(const CardioidSpec& spec, Complex u);

/// Lambda(u_k) for u_k = e^{2 pi i k / n_samples}.
SampledBoundary cardioid_boundary(const CardioidSpec& spec, int n_samples);

/// d * Lambda(u_k) for the degree-d cardioid.
SampledBoundary rescaled_boundary(int d, int n_samples);

/// Fixed point of Z -> Lambda e^{-Z} continuing p = 0 from Lambda = 0.
///
/// Damped Newton on Lambda e^{-p} - p, seeded at Lambda / (1 + |Lambda|) and then
/// at 0.5, -0.5, 0.5i, -0.5i. Throws NoConvergence if no seed reaches a residual
/// of 1e-12 * max(1, |Lambda|) within 200 steps.
FixedPointData fixed_point(Complex lambda);

struct CardioidMembership {
  bool inside = false;
  /// Set when the fixed-point solver failed and the answer came from the
  /// modulus bound |Lambda| > e.
  bool solver_failed = false;

  explicit operator bool() const { return inside; }
};

/// Open-set membership in C_d or C_inf. Finite degrees use the winding number
/// of 4096 boundary samples.
CardioidMembership cardioid_contains(const CardioidSpec& spec, Complex lambda);

enum class ZeroFreeDisk { Shearer, SemiDisk };

/// Radius of a classical zero-free disk, rescaled by d in the infinite case.
double known_zero_free_radius(ZeroFreeDisk kind, const CardioidSpec& spec);

struct RealInterval {
  double left;
  double right;  // +inf for the bounded-orbit trace
  bool left_closed;
};

/// C_d cap R (open) or C_inf cap R; with bounded_orbit_trace set and an
/// infinite spec, returns the real trace [-1/e, inf) of the bounded-orbit set.
RealInterval real_interval(const CardioidSpec& spec, bool bounded_orbit_trace = false);

/// Derivative of log(1+x) o E_Lambda o (e^x - 1) on the positive axis.
double real_contraction_derivative(double lambda, double x);

/// Sample-based Hausdorff distance (a lower bound for the curves it samples).
double hausdorff_distance(const SampledBoundary& a, const SampledBoundary& b);

/// Winding number of a closed polyline around a point.
int winding_number(const std::vector<Complex>& closed_curve, Complex point);

}  // namespace zerofree
