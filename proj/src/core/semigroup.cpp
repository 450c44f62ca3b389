#include "zerofree/semigroup.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "zerofree/cardioid.hpp"
#include "zerofree/error.hpp"

namespace zerofree {

WeightTuple::WeightTuple(std::vector<double> weights) : weights_(std::move(weights)) {
  require(!weights_.empty(), ErrorCode::InvalidArgument, "weight tuple must be non-empty");
  for (const double s : weights_) {
    require(std::isfinite(s) && s >= 0.0, ErrorCode::InvalidArgument, "weights must be finite and nonnegative");
  }
  require(sum() <= 1.0 + 1e-12, ErrorCode::InvalidArgument, "weights must sum to at most 1");
}

double WeightTuple::sum() const { return std::accumulate(weights_.begin(), weights_.end(), 0.0); }

GSpec GSpec::compose(WeightTuple weights, std::vector<GSpec> children) {
  require(children.size() == weights.size(), ErrorCode::ArityMismatch, "GSpec arity differs from weight count");
  GSpec g;
  g.weights_ = std::move(weights);
  g.children_ = std::move(children);
  return g;
}

size_t GSpec::depth() const {
  if (is_identity()) return 0;
  size_t deepest = 0;
  for (const auto& c : children_) deepest = std::max(deepest, c.depth());
  return deepest + 1;
}

Complex apply_E(Complex lambda, const WeightTuple& w, std::span<const Complex> z) {
  require(z.size() == w.size(), ErrorCode::ArityMismatch, "argument count differs from weight count");
  Complex exponent(0.0, 0.0);
  for (size_t i = 0; i < z.size(); ++i) exponent -= w.weights()[i] * z[i];
  return lambda * std::exp(exponent);
}

Complex eval_gspec(const GSpec& g, Complex lambda, Complex z) {
  if (g.is_identity()) return z;
  std::vector<Complex> args;
  args.reserve(g.children().size());
  for (const auto& child : g.children()) args.push_back(eval_gspec(child, lambda, z));
  return apply_E(lambda, g.weights(), args);
}

void OrbitConfig::validate() const {
  require(boundary_samples > 0, ErrorCode::Config, "boundary_samples must be positive");
  require(max_iter > 0, ErrorCode::Config, "max_iter must be positive");
  require(escape_radius > 0.0 && std::isfinite(escape_radius), ErrorCode::Config, "escape_radius must be positive");
  require(stab_tol > 0.0, ErrorCode::Config, "stab_tol must be positive");
  require(interior_tol > 0.0, ErrorCode::Config, "interior_tol must be positive");
}

const char* to_string(HullStatus status) {
  switch (status) {
    case HullStatus::Converged: return "converged";
    case HullStatus::Escaped: return "escaped";
    case HullStatus::MaxIter: return "max_iter";
    case HullStatus::OriginInterior: return "origin_interior";
  }
  return "unknown";
}

const char* to_string(Membership m) {
  switch (m) {
    case Membership::Member: return "member";
    case Membership::ExcludedEscape: return "excluded_escape";
    case Membership::ExcludedInterior: return "excluded_interior";
    case Membership::Undecided: return "undecided";
  }
  return "unknown";
}

namespace {

constexpr double kTwoPi = 2.0 * kPi;

double origin_clearance(const ConvexPolygon& k) { return std::max(0.0, k.signed_distance(Complex(0.0, 0.0))); }

}  // namespace

HullApproximation hull_iterate(Complex lambda, const OrbitConfig& cfg) {
  cfg.validate();
  HullApproximation result;
  ConvexPolygon current = ConvexPolygon::hull({Complex(0.0, 0.0), lambda});
  // For each vertex of `current`, its index in the previous hull or
  // kNewVertex. Vertices and edges carried over unchanged were imaged when
  // they appeared, and those images already lie inside `current`.
  std::vector<size_t> origin(current.size(), ConvexPolygon::kNewVertex);
  size_t previous_size = 0;
  std::vector<Complex> points;
  for (size_t iter = 1; iter <= cfg.max_iter; ++iter) {
    const auto& verts = current.vertices();
    const size_t n = verts.size();
    points.clear();
    bool overflow = false;
    auto push_image = [&](Complex z) {
      const Complex w = lambda * std::exp(-z);
      if (!std::isfinite(w.real()) || !std::isfinite(w.imag())) {
        overflow = true;
        return;
      }
      points.push_back(w);
    };
    for (size_t i = 0; i < n; ++i) {
      if (origin[i] == ConvexPolygon::kNewVertex) push_image(verts[i]);
    }
    // new edges are sampled at the arclength spacing of a uniform
    // boundary_samples-point sampling
    const double spacing = current.perimeter() / static_cast<double>(cfg.boundary_samples);
    const size_t edges = n < 2 ? 0 : (n == 2 ? 1 : n);
    for (size_t i = 0; i < edges; ++i) {
      const size_t k = (i + 1) % n;
      const bool carried = origin[i] != ConvexPolygon::kNewVertex && origin[k] != ConvexPolygon::kNewVertex &&
                           (origin[i] + 1) % previous_size == origin[k];
      if (carried) continue;
      const Complex a = verts[i];
      const Complex b = verts[k];
      const double len = std::abs(b - a);
      const size_t count = spacing > 0.0 ? static_cast<size_t>(len / spacing) : 0;
      for (size_t m = 1; m <= count; ++m) push_image(a + (b - a) * (static_cast<double>(m) / static_cast<double>(count + 1)));
    }

    std::vector<size_t> next_origin;
    ConvexPolygon next = current.hull_with(points, &next_origin);
    result.iterations = iter;
    result.diameter = next.diameter();
    result.origin_clearance = origin_clearance(next);
    if (overflow || result.diameter > cfg.escape_radius || next.imaginary_axis_reach() >= kTwoPi) {
      result.polygon = std::move(next);
      result.status = HullStatus::Escaped;
      return result;
    }
    if (cfg.stop_on_interior && result.origin_clearance > cfg.interior_tol * result.diameter) {
      result.polygon = std::move(next);
      result.status = HullStatus::OriginInterior;
      return result;
    }
    const double moved = nested_hausdorff(current, next, next_origin);
    previous_size = current.size();
    current = std::move(next);
    origin = std::move(next_origin);
    if (moved < cfg.stab_tol) {
      result.polygon = std::move(current);
      result.status = HullStatus::Converged;
      return result;
    }
  }
  result.polygon = std::move(current);
  result.status = HullStatus::MaxIter;
  return result;
}

MembershipResult classify_membership_detailed(Complex lambda, const OrbitConfig& cfg) {
  MembershipResult out;
  out.hull = hull_iterate(lambda, cfg);
  switch (out.hull.status) {
    case HullStatus::Escaped:
      out.membership = Membership::ExcludedEscape;
      break;
    case HullStatus::OriginInterior:
      out.membership = Membership::ExcludedInterior;
      break;
    case HullStatus::Converged:
      out.membership = out.hull.origin_clearance > cfg.interior_tol * out.hull.diameter ? Membership::ExcludedInterior
                                                                                      : Membership::Member;
      break;
    case HullStatus::MaxIter:
      out.membership = Membership::Undecided;
      break;
  }
  return out;
}

Membership classify_membership(Complex lambda, const OrbitConfig& cfg) {
  return classify_membership_detailed(lambda, cfg).membership;
}

double image_clearance(Complex lambda, const ConvexPolygon& region, size_t samples) {
  double worst = std::numeric_limits<double>::infinity();
  auto check = [&](Complex z) { worst = std::min(worst, region.signed_distance(lambda * std::exp(-z))); };
  for (const Complex v : region.vertices()) check(v);
  for (const Complex z : region.sample_boundary(samples)) check(z);
  return worst;
}

StrictInvariantResult strict_invariant_candidate(Complex lambda, double t, const OrbitConfig& cfg) {
  require(lambda.imag() != 0.0, ErrorCode::Domain, "strict invariant candidate needs a non-real parameter");
  require(t > 1.0, ErrorCode::Domain, "strict invariant candidate needs t > 1");
  StrictInvariantResult out;
  const MembershipResult scaled = classify_membership_detailed(t * lambda, cfg);
  if (scaled.membership != Membership::Member) {
    out.reason = std::string("t*Lambda is not a member: ") + to_string(scaled.membership);
    return out;
  }
  const double t_mid = 0.5 * (1.0 + t);
  const ConvexPolygon base = scaled.hull.polygon.scaled(1.0 / t_mid);
  const size_t samples = 4 * cfg.boundary_samples;
  out.polygon = base;
  out.min_clearance = image_clearance(lambda, base, samples);
  if (out.min_clearance > 0.0) {
    out.ok = true;
    return out;
  }

  // The scaled hull can only touch its image along the two radial edges at 0.
  const auto& v = base.vertices();
  const size_t n = v.size();
  if (n < 3) {
    out.reason = "degenerate hull";
    return out;
  }
  const double diam = base.diameter();
  size_t origin = n;
  for (size_t i = 0; i < n; ++i) {
    if (std::abs(v[i]) <= 1e-12 * std::max(1.0, diam)) origin = i;
  }
  if (origin == n) {
    out.reason = "origin is not a hull vertex";
    return out;
  }
  const Complex after = v[(origin + 1) % n];
  const Complex before = v[(origin + n - 1) % n];
  // pick the radial edge nearest to the worst image point
  Complex worst_image = lambda;
  double worst = std::numeric_limits<double>::infinity();
  for (const Complex z : base.sample_boundary(samples)) {
    const Complex w = lambda * std::exp(-z);
    const double c = base.signed_distance(w);
    if (c < worst) {
      worst = c;
      worst_image = w;
    }
  }
  const bool use_after = distance_to_segment(worst_image, Complex(0.0), after) <=
                         distance_to_segment(worst_image, Complex(0.0), before);
  // rotate the far endpoint of that edge away from the interior
  const Complex far = use_after ? after : before;
  const double direction = use_after ? -1.0 : 1.0;
  for (double eps = 1e-2; eps >= 1e-8; eps *= 0.5) {
    std::vector<Complex> pts = v;
    pts.push_back(far * std::polar(1.0, direction * eps));
    ConvexPolygon widened = ConvexPolygon::hull(std::move(pts));
    const double clearance = image_clearance(lambda, widened, samples);
    if (clearance > 0.0) {
      out.ok = true;
      out.polygon = std::move(widened);
      out.min_clearance = clearance;
      out.sector_epsilon = eps;
      return out;
    }
  }
  out.reason = "no sector width gave strict invariance";
  return out;
}

std::vector<Membership> star_convexity_probe(Complex lambda, std::span<const double> ts, const OrbitConfig& cfg) {
  std::vector<Membership> out;
  out.reserve(ts.size());
  for (const double t : ts) out.push_back(classify_membership(t * lambda, cfg));
  return out;
}

}  // namespace zerofree
