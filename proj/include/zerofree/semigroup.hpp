#pragma once

// Weighted exponential maps E_{Lambda,(s_1..s_k)}(Z_1..Z_k) = Lambda e^{-sum s_i Z_i},
// the semigroup G_Lambda they generate, and the polygonal approximation of
// the convex hull of the orbit of 0 used to decide whether V_Lambda is bounded.

#include <complex>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "zerofree/polygon.hpp"

namespace zerofree {

using Complex = std::complex<double>;

/// Nonnegative weights with sum at most 1 (up to 1e-12).
class WeightTuple {
 public:
  explicit WeightTuple(std::vector<double> weights);

  const std::vector<double>& weights() const { return weights_; }
  size_t size() const { return weights_.size(); }
  double sum() const;

 private:
  std::vector<double> weights_;
};

/// Element of G_Lambda: the identity, or E_{Lambda,w}(g_1(Z), ..., g_k(Z)).
class GSpec {
 public:
  static GSpec identity() { return GSpec{}; }
  /// Throws ArityMismatch unless children.size() == weights.size().
  static GSpec compose(WeightTuple weights, std::vector<GSpec> children);
  /// E_Lambda itself: weight (1) over the identity.
  static GSpec exponential() { return compose(WeightTuple({1.0}), {identity()}); }

  bool is_identity() const { return !weights_.has_value(); }
  const WeightTuple& weights() const { return *weights_; }
  const std::vector<GSpec>& children() const { return children_; }

  /// Number of COMPOSE nodes.
  size_t depth() const;

 private:
  std::optional<WeightTuple> weights_;
  std::vector<GSpec> children_;
};

Complex apply_E(Complex lambda, const WeightTuple& w, std::span<const Complex> z);
Complex eval_gspec(const GSpec& g, Complex lambda, Complex z);

struct OrbitConfig {
  size_t boundary_samples = 1024;
  size_t max_iter = 500;
  double escape_radius = 50.0;
  double stab_tol = 1e-9;
  /// Origin clearance, relative to the diameter, that counts as interior.
  double interior_tol = 1e-4;
  /// Stop as soon as the origin is certified interior.
  bool stop_on_interior = true;

  void validate() const;
};

enum class HullStatus { Converged, Escaped, MaxIter, OriginInterior };

const char* to_string(HullStatus status);

struct HullApproximation {
  ConvexPolygon polygon;
  HullStatus status = HullStatus::MaxIter;
  size_t iterations = 0;
  /// Distance from 0 to the polygon boundary; 0 is always inside the polygon.
  double origin_clearance = 0.0;
  double diameter = 0.0;
};

/// Grows K_0 = hull{0, Lambda}, K_{n+1} = hull(K_n ∪ E_Lambda(∂K_n)).
///
/// Extreme points of hull(E_Lambda(K)) lie in E_Lambda(∂K) because E_Lambda is
/// open, so sampling the boundary suffices. Every K_n lies in the closure of
/// the orbit hull, which makes an interior origin a certificate that V_Lambda
/// is unbounded; with stop_on_interior set, the iteration ends there.
HullApproximation hull_iterate(Complex lambda, const OrbitConfig& cfg = {});

enum class Membership { Member, ExcludedEscape, ExcludedInterior, Undecided };

const char* to_string(Membership m);

struct MembershipResult {
  Membership membership = Membership::Undecided;
  HullApproximation hull;
};

/// Decides Lambda against the closure of the zero-free limit set by testing
/// whether 0 stays on the boundary of the orbit hull.
MembershipResult classify_membership_detailed(Complex lambda, const OrbitConfig& cfg = {});
Membership classify_membership(Complex lambda, const OrbitConfig& cfg = {});

struct StrictInvariantResult {
  bool ok = false;
  ConvexPolygon polygon;
  /// Smallest signed distance of a sampled image E_Lambda(∂K) to ∂K.
  double min_clearance = 0.0;
  /// Sector angle used, 0 when the scaled hull already worked.
  double sector_epsilon = 0.0;
  std::string reason;
};

/// Builds K = V̂_{tΛ} / t' with t' = (1+t)/2 and checks that E_Lambda maps the
/// sampled boundary strictly inside K, widening K by a small sector at the
/// touching radial edge when needed.
StrictInvariantResult strict_invariant_candidate(Complex lambda, double t, const OrbitConfig& cfg = {});

/// Signed clearance of E_Lambda(samples of ∂K) inside K (min over samples).
double image_clearance(Complex lambda, const ConvexPolygon& region, size_t samples);

std::vector<Membership> star_convexity_probe(Complex lambda, std::span<const double> ts, const OrbitConfig& cfg = {});

}  // namespace zerofree
