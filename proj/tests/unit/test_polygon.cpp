#include <doctest.h>

#include <algorithm>
#include <random>

#include "../support/oracles.hpp"
#include "zerofree/polygon.hpp"

using namespace zerofree;

namespace {

// O(n^2) reference: p is a hull vertex iff it is not inside any triangle of
// the other points or on a segment between two of them.
bool in_closed_triangle(Complex p, Complex a, Complex b, Complex c) {
  const double d1 = cross(a, b, p);
  const double d2 = cross(b, c, p);
  const double d3 = cross(c, a, p);
  const bool neg = d1 < 0 || d2 < 0 || d3 < 0;
  const bool pos = d1 > 0 || d2 > 0 || d3 > 0;
  return !(neg && pos);
}

}  // namespace

TEST_SUITE("polygon") {

TEST_CASE("degenerate hulls") {
  CHECK(ConvexPolygon::hull({}).empty());
  CHECK(ConvexPolygon::hull({Complex(1, 1), Complex(1, 1)}).size() == 1);
  const auto seg = ConvexPolygon::hull({Complex(0, 0), Complex(1, 0), Complex(0.5, 0)});
  CHECK(seg.size() == 2);
  CHECK(seg.diameter() == doctest::Approx(1.0));
  CHECK(seg.perimeter() == doctest::Approx(2.0));
  CHECK(seg.signed_distance(Complex(0.5, 0.3)) == doctest::Approx(-0.3));
}

TEST_CASE("square queries") {
  const auto sq = ConvexPolygon::hull({{0, 0}, {2, 0}, {2, 2}, {0, 2}, {1, 1}, {1, 0}});
  CHECK(sq.size() == 4);
  CHECK(sq.area() == doctest::Approx(4.0));
  CHECK(sq.perimeter() == doctest::Approx(8.0));
  CHECK(sq.diameter() == doctest::Approx(std::sqrt(8.0)));
  CHECK(sq.signed_distance(Complex(1, 0.5)) == doctest::Approx(0.5));
  CHECK(sq.signed_distance(Complex(3, 1)) == doctest::Approx(-1.0));
  CHECK(sq.outside_distance(Complex(3, 3)) == doctest::Approx(std::sqrt(2.0)));
  CHECK(sq.outside_distance(Complex(1, 1)) == 0.0);
  CHECK(sq.imaginary_axis_reach() == doctest::Approx(2.0));
  CHECK(sq.min_turn() > 0.0);
  const auto samples = sq.sample_boundary(8);
  REQUIRE(samples.size() == 8);
  for (const auto z : samples) CHECK(std::abs(sq.signed_distance(z)) < 1e-12);
}

TEST_CASE("property: hull agrees with the triangle oracle") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Complex> pts;
    const size_t n = oracle::pick(rng, 3, 25);
    for (size_t i = 0; i < n; ++i) pts.push_back(oracle::in_disk(rng, 1.0));
    const auto h = ConvexPolygon::hull(pts);
    CHECK(h.area() > 0.0);
    CHECK(h.min_turn() > 0.0);
    for (const auto p : pts) {
      bool covered = false;
      const auto& v = h.vertices();
      for (size_t i = 1; i + 1 < v.size() && !covered; ++i) covered = in_closed_triangle(p, v[0], v[i], v[i + 1]);
      CHECK(covered);
      const bool is_vertex = std::find(v.begin(), v.end(), p) != v.end();
      bool interior_to_others = false;
      for (size_t a = 0; a < n && !interior_to_others; ++a)
        for (size_t b = a + 1; b < n && !interior_to_others; ++b)
          for (size_t c = b + 1; c < n && !interior_to_others; ++c)
            if (pts[a] != p && pts[b] != p && pts[c] != p) interior_to_others = in_closed_triangle(p, pts[a], pts[b], pts[c]);
      CHECK(is_vertex != interior_to_others);
    }
  }
}

TEST_CASE("property: hull_with equals the hull of the union") {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<Complex> a;
    std::vector<Complex> b;
    for (size_t i = oracle::pick(rng, 1, 12); i > 0; --i) a.push_back(oracle::in_disk(rng, 1.0));
    for (size_t i = oracle::pick(rng, 0, 12); i > 0; --i) b.push_back(oracle::in_disk(rng, 1.5));
    if (trial % 5 == 0 && !a.empty()) b.push_back(a.front());  // shared point
    const auto base = ConvexPolygon::hull(a);
    std::vector<size_t> origin;
    const auto merged = base.hull_with(b, &origin);
    std::vector<Complex> all = a;
    all.insert(all.end(), b.begin(), b.end());
    CHECK(merged.vertices() == ConvexPolygon::hull(all).vertices());
    REQUIRE(origin.size() == merged.size());
    for (size_t i = 0; i < origin.size(); ++i) {
      if (origin[i] != ConvexPolygon::kNewVertex) CHECK(base.vertices()[origin[i]] == merged.vertices()[i]);
    }
    CHECK(nested_hausdorff(base, merged, origin) == doctest::Approx(nested_hausdorff(base, merged)));
  }
}

TEST_CASE("property: outside distance matches the brute-force edge minimum") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Complex> pts;
    for (int i = 0; i < 30; ++i) pts.push_back(oracle::in_disk(rng, 1.0));
    const auto h = ConvexPolygon::hull(pts);
    size_t hint = 0;
    for (int q = 0; q < 20; ++q) {
      const Complex p = oracle::in_disk(rng, 3.0);
      double brute = INFINITY;
      const auto& v = h.vertices();
      for (size_t i = 0; i < v.size(); ++i) brute = std::min(brute, distance_to_segment(p, v[i], v[(i + 1) % v.size()]));
      const double expected = h.signed_distance(p) >= 0.0 ? 0.0 : brute;
      CHECK(h.outside_distance(p, &hint) == doctest::Approx(expected).epsilon(1e-12));
    }
  }
}

}
