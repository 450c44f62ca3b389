#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace zerofree {

using Complex = std::complex<double>;

/// z-component of (a - o) x (b - o); positive for a left turn.
inline double cross(Complex o, Complex a, Complex b) {
  return (a.real() - o.real()) * (b.imag() - o.imag()) - (a.imag() - o.imag()) * (b.real() - o.real());
}

double distance_to_segment(Complex p, Complex a, Complex b);

/// Bounded convex region stored as counterclockwise vertices.
///
/// One vertex is a point and two vertices are a segment; both degenerate cases
/// occur for real parameters and are handled by every query.
class ConvexPolygon {
 public:
  ConvexPolygon() = default;

  /// Andrew's monotone chain. Collinear and duplicate points are dropped.
  static ConvexPolygon hull(std::vector<Complex> points);
  /// Wraps vertices already in counterclockwise convex position.
  static ConvexPolygon from_ccw(std::vector<Complex> vertices);

  static constexpr size_t kNewVertex = static_cast<size_t>(-1);

  /// Hull of this polygon and extra points. Only the extra points are sorted;
  /// the vertex chains are merged in linear time. `origin`, if given, receives
  /// for each result vertex its index in this polygon, or kNewVertex.
  ConvexPolygon hull_with(std::vector<Complex> extra, std::vector<size_t>* origin = nullptr) const;

  const std::vector<Complex>& vertices() const { return vertices_; }
  size_t size() const { return vertices_.size(); }
  bool empty() const { return vertices_.empty(); }
  bool degenerate() const { return vertices_.size() < 3; }

  double perimeter() const;
  double area() const;
  double diameter() const;

  /// Distance to the boundary, positive inside and negative outside. For
  /// degenerate polygons this is minus the distance to the point or segment.
  double signed_distance(Complex p) const;
  bool contains(Complex p, double tol = 0.0) const { return signed_distance(p) >= -tol; }

  /// Distance from p to the region (0 when p is inside). Runs in O(log n) plus
  /// a short local walk for outside points; `hint` carries the last edge used.
  double outside_distance(Complex p, size_t* hint = nullptr) const;

  /// n points spaced uniformly in arclength along the boundary, starting at
  /// vertex 0. For a segment the samples include both endpoints.
  std::vector<Complex> sample_boundary(size_t n) const;

  ConvexPolygon scaled(double factor) const;

  /// Largest |Im z| over points z of the region on the imaginary axis, or -1
  /// when the region misses the axis.
  double imaginary_axis_reach() const;

  /// Smallest cross product of consecutive edges (convexity check).
  double min_turn() const;

 private:
  explicit ConvexPolygon(std::vector<Complex> v) : vertices_(std::move(v)) {}
  bool inside_fan(Complex p, size_t* wedge) const;

  std::vector<Complex> vertices_;
};

/// Hausdorff distance between nested polygons inner ⊆ outer: the largest
/// distance from a vertex of `outer` to `inner`.
double nested_hausdorff(const ConvexPolygon& inner, const ConvexPolygon& outer);

/// Same, using the origin map from hull_with to skip vertices of `outer` that
/// are vertices of `inner`.
double nested_hausdorff(const ConvexPolygon& inner, const ConvexPolygon& outer, const std::vector<size_t>& origin);

}  // namespace zerofree
