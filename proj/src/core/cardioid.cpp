#include "zerofree/cardioid.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

#include "zerofree/error.hpp"

namespace zerofree {

CardioidSpec CardioidSpec::finite(int degree) {
  require(degree >= 2, ErrorCode::Domain, "cardioid degree must be at least 2");
  CardioidSpec spec;
  spec.degree_ = degree;
  return spec;
}

Complex cardioid_point(const CardioidSpec& spec, Complex u) {
  if (spec.is_infinite()) return -u * std::exp(-u);
  // -d^d u / (u + d)^{d+1} = -u / (d (1 + u/d)^{d+1})
  const double d = spec.degree();
  const Complex base = 1.0 + u / d;
  return -u / (d * std::exp((d + 1.0) * std::log(base)));
}

SampledBoundary cardioid_boundary(const CardioidSpec& spec, int n_samples) {
  require(n_samples >= 3, ErrorCode::InvalidArgument, "cardioid boundary needs at least 3 samples");
  SampledBoundary out;
  out.points.reserve(static_cast<size_t>(n_samples));
  for (int k = 0; k < n_samples; ++k) {
    const Complex u = std::polar(1.0, 2.0 * kPi * k / n_samples);
    out.points.push_back(cardioid_point(spec, u));
  }
  out.closed = true;
  return out;
}

SampledBoundary rescaled_boundary(int d, int n_samples) {
  SampledBoundary out = cardioid_boundary(CardioidSpec::finite(d), n_samples);
  for (auto& p : out.points) p *= static_cast<double>(d);
  return out;
}

namespace {

constexpr int kNewtonSteps = 200;

double fixed_point_tolerance(Complex lambda) { return 1e-12 * std::max(1.0, std::abs(lambda)); }

// Damped Newton for Lambda e^{-p} = p from one seed.
std::optional<Complex> newton_fixed_point(Complex lambda, Complex seed) {
  const double tol = fixed_point_tolerance(lambda);
  auto residual = [&](Complex p) { return lambda * std::exp(-p) - p; };
  Complex p = seed;
  Complex f = residual(p);
  for (int step = 0; step < kNewtonSteps; ++step) {
    if (!std::isfinite(std::abs(f))) return std::nullopt;
    if (std::abs(f) <= tol) return p;
    const Complex df = -lambda * std::exp(-p) - 1.0;
    if (std::abs(df) == 0.0) return std::nullopt;
    const Complex dp = f / df;
    double damping = 1.0;
    Complex next = p - dp;
    Complex f_next = residual(next);
    // halve the step while the residual grows
    while (!(std::abs(f_next) < std::abs(f)) && damping > 1e-6) {
      damping *= 0.5;
      next = p - damping * dp;
      f_next = residual(next);
    }
    p = next;
    f = f_next;
  }
  if (std::abs(f) <= tol) return p;
  return std::nullopt;
}

std::array<Complex, 5> newton_seeds(Complex lambda) {
  return {lambda / (1.0 + std::abs(lambda)), Complex(0.5, 0.0), Complex(-0.5, 0.0), Complex(0.0, 0.5),
          Complex(0.0, -0.5)};
}

}  // namespace

FixedPointData fixed_point(Complex lambda) {
  if (lambda == Complex(0.0, 0.0)) return {lambda, Complex(0.0), Complex(0.0)};
  for (const Complex seed : newton_seeds(lambda)) {
    if (auto p = newton_fixed_point(lambda, seed)) return {lambda, *p, -*p};
  }
  fail(ErrorCode::NoConvergence, "fixed point iteration did not converge");
}

CardioidMembership cardioid_contains(const CardioidSpec& spec, Complex lambda) {
  if (!spec.is_infinite()) {
    const SampledBoundary boundary = cardioid_boundary(spec, 4096);
    return {winding_number(boundary.points, lambda) != 0, false};
  }
  if (lambda == Complex(0.0, 0.0)) return {true, false};
  constexpr double kOpenMargin = 1.0 - 1e-12;
  // The attracting fixed point is unique, so any seed that lands on a fixed
  // point with |p| < 1 settles membership.
  bool any_converged = false;
  for (const Complex seed : newton_seeds(lambda)) {
    if (auto p = newton_fixed_point(lambda, seed)) {
      any_converged = true;
      if (std::abs(*p) < kOpenMargin) return {true, false};
    }
  }
  if (!any_converged) return {false, true};
  return {false, false};
}

double known_zero_free_radius(ZeroFreeDisk kind, const CardioidSpec& spec) {
  switch (kind) {
    case ZeroFreeDisk::Shearer: {
      if (spec.is_infinite()) return kInvE;
      const double d = spec.degree();
      // d^d / (d+1)^{d+1} = (d/(d+1))^d / (d+1)
      return std::pow(d / (d + 1.0), d) / (d + 1.0);
    }
    case ZeroFreeDisk::SemiDisk: {
      if (spec.is_infinite()) return 7.0 * kPi / 16.0;
      const double d = spec.degree();
      return 7.0 / 8.0 * std::tan(kPi / (2.0 * d));
    }
  }
  fail(ErrorCode::InvalidArgument, "unknown zero-free disk kind");
}

RealInterval real_interval(const CardioidSpec& spec, bool bounded_orbit_trace) {
  if (spec.is_infinite()) {
    if (bounded_orbit_trace) return {-kInvE, std::numeric_limits<double>::infinity(), true};
    return {-kInvE, kE, false};
  }
  const double d = spec.degree();
  const double left = -std::pow(d / (d + 1.0), d) / (d + 1.0);
  // d^d / (d-1)^{d+1} = (d/(d-1))^d / (d-1)
  const double right = std::pow(d / (d - 1.0), d) / (d - 1.0);
  return {left, right, false};
}

double real_contraction_derivative(double lambda, double x) {
  require(lambda > 0.0 && lambda < kE, ErrorCode::Domain, "contraction derivative needs Lambda in (0, e)");
  require(x >= 0.0, ErrorCode::Domain, "contraction derivative needs x >= 0");
  const double ex = std::exp(x);
  return -ex / (1.0 + std::exp(ex - 1.0) / lambda);
}

double hausdorff_distance(const SampledBoundary& a, const SampledBoundary& b) {
  require(!a.points.empty() && !b.points.empty(), ErrorCode::EmptyInput, "hausdorff distance of an empty sample");
  auto directed = [](const std::vector<Complex>& from, const std::vector<Complex>& to) {
    double worst = 0.0;
    for (const Complex p : from) {
      double best = std::numeric_limits<double>::infinity();
      for (const Complex q : to) best = std::min(best, std::norm(p - q));
      worst = std::max(worst, best);
    }
    return std::sqrt(worst);
  };
  return std::max(directed(a.points, b.points), directed(b.points, a.points));
}

int winding_number(const std::vector<Complex>& closed_curve, Complex point) {
  const size_t n = closed_curve.size();
  if (n < 3) return 0;
  double total = 0.0;
  for (size_t k = 0; k < n; ++k) {
    const Complex a = closed_curve[k] - point;
    const Complex b = closed_curve[(k + 1) % n] - point;
    if (a == Complex(0.0) || b == Complex(0.0)) return 0;
    total += std::arg(b / a);
  }
  return static_cast<int>(std::lround(total / (2.0 * kPi)));
}

}  // namespace zerofree
