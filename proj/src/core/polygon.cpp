#include "zerofree/polygon.hpp"

#include <algorithm>
#include <cmath>
#include <iterator>
#include <limits>

namespace zerofree {

namespace {

// sqrt of the squared modulus; std::abs goes through hypot, which dominates
// the hull loop
double length(Complex z) { return std::sqrt(std::norm(z)); }

double squared_distance_to_segment(Complex p, Complex a, Complex b) {
  const Complex ab = b - a;
  const double len2 = std::norm(ab);
  if (len2 == 0.0) return std::norm(p - a);
  double t = ((p.real() - a.real()) * ab.real() + (p.imag() - a.imag()) * ab.imag()) / len2;
  t = std::clamp(t, 0.0, 1.0);
  return std::norm(p - (a + t * ab));
}

}  // namespace

double distance_to_segment(Complex p, Complex a, Complex b) { return std::sqrt(squared_distance_to_segment(p, a, b)); }

namespace {

bool lex_less(Complex a, Complex b) { return a.real() < b.real() || (a.real() == b.real() && a.imag() < b.imag()); }

struct Tagged {
  Complex z;
  size_t origin;
};

// Monotone chain over points already sorted lexicographically. Among equal
// points the first one is kept.
std::vector<Tagged> chain_sorted(std::vector<Tagged>& pts) {
  pts.erase(std::unique(pts.begin(), pts.end(), [](const Tagged& a, const Tagged& b) { return a.z == b.z; }),
            pts.end());
  if (pts.size() <= 2) return pts;

  std::vector<Tagged> h(2 * pts.size());
  size_t k = 0;
  for (const Tagged& p : pts) {
    while (k >= 2 && cross(h[k - 2].z, h[k - 1].z, p.z) <= 0.0) --k;
    h[k++] = p;
  }
  for (size_t i = pts.size() - 1, lower = k + 1; i-- > 0;) {
    const Tagged& p = pts[i];
    while (k >= lower && cross(h[k - 2].z, h[k - 1].z, p.z) <= 0.0) --k;
    h[k++] = p;
  }
  h.resize(k - 1);
  return h;
}

std::vector<Complex> untag(const std::vector<Tagged>& pts) {
  std::vector<Complex> out(pts.size());
  for (size_t i = 0; i < pts.size(); ++i) out[i] = pts[i].z;
  return out;
}

}  // namespace

ConvexPolygon ConvexPolygon::hull(std::vector<Complex> pts) {
  std::sort(pts.begin(), pts.end(), lex_less);
  std::vector<Tagged> tagged(pts.size());
  for (size_t i = 0; i < pts.size(); ++i) tagged[i] = {pts[i], kNewVertex};
  return ConvexPolygon(untag(chain_sorted(tagged)));
}

ConvexPolygon ConvexPolygon::hull_with(std::vector<Complex> extra, std::vector<size_t>* origin) const {
  std::sort(extra.begin(), extra.end(), lex_less);
  const size_t n = vertices_.size();
  std::vector<Tagged> own;
  own.reserve(n);
  for (size_t i = 0; i < n; ++i) own.push_back({vertices_[i], i});
  if (n <= 2) {
    std::sort(own.begin(), own.end(), [](const Tagged& a, const Tagged& b) { return lex_less(a.z, b.z); });
  } else {
    // vertices_ starts at the lexicographic minimum; the lower chain runs up
    // to the maximum, the upper chain back down
    const auto top = std::max_element(vertices_.begin(), vertices_.end(), lex_less) - vertices_.begin();
    std::vector<Tagged> chains = std::move(own);
    own.clear();
    std::merge(chains.begin(), chains.begin() + top + 1, chains.rbegin(), chains.rend() - top - 1,
               std::back_inserter(own), [](const Tagged& a, const Tagged& b) { return lex_less(a.z, b.z); });
  }
  std::vector<Tagged> all;
  all.reserve(own.size() + extra.size());
  size_t i = 0;
  size_t j = 0;
  while (i < own.size() || j < extra.size()) {
    // old vertices win ties so that duplicates keep their origin
    if (j == extra.size() || (i < own.size() && !lex_less(extra[j], own[i].z)))
      all.push_back(own[i++]);
    else
      all.push_back({extra[j++], kNewVertex});
  }
  const std::vector<Tagged> h = chain_sorted(all);
  if (origin != nullptr) {
    origin->resize(h.size());
    for (size_t k = 0; k < h.size(); ++k) (*origin)[k] = h[k].origin;
  }
  return ConvexPolygon(untag(h));
}

ConvexPolygon ConvexPolygon::from_ccw(std::vector<Complex> vertices) { return ConvexPolygon(std::move(vertices)); }

double ConvexPolygon::perimeter() const {
  const size_t n = vertices_.size();
  if (n < 2) return 0.0;
  if (n == 2) return 2.0 * length(vertices_[1] - vertices_[0]);
  double total = 0.0;
  for (size_t i = 0; i < n; ++i) total += length(vertices_[(i + 1) % n] - vertices_[i]);
  return total;
}

double ConvexPolygon::area() const {
  const size_t n = vertices_.size();
  if (n < 3) return 0.0;
  double twice = 0.0;
  for (size_t i = 0; i < n; ++i) {
    const Complex a = vertices_[i];
    const Complex b = vertices_[(i + 1) % n];
    twice += a.real() * b.imag() - a.imag() * b.real();
  }
  return 0.5 * twice;
}

double ConvexPolygon::diameter() const {
  const size_t n = vertices_.size();
  if (n < 2) return 0.0;
  if (n == 2) return length(vertices_[1] - vertices_[0]);
  // rotating calipers over antipodal pairs
  double best = 0.0;
  size_t j = 1;
  for (size_t i = 0; i < n; ++i) {
    const Complex a = vertices_[i];
    const Complex b = vertices_[(i + 1) % n];
    while (std::abs(cross(a, b, vertices_[(j + 1) % n])) > std::abs(cross(a, b, vertices_[j]))) j = (j + 1) % n;
    best = std::max({best, std::norm(vertices_[j] - a), std::norm(vertices_[j] - b)});
  }
  return std::sqrt(best);
}

double ConvexPolygon::signed_distance(Complex p) const {
  const size_t n = vertices_.size();
  if (n == 0) return -std::numeric_limits<double>::infinity();
  if (n == 1) return -length(p - vertices_[0]);
  if (n == 2) return -distance_to_segment(p, vertices_[0], vertices_[1]);
  bool inside = true;
  double dist2 = std::numeric_limits<double>::infinity();
  for (size_t i = 0; i < n; ++i) {
    const Complex a = vertices_[i];
    const Complex b = vertices_[i + 1 == n ? 0 : i + 1];
    if (cross(a, b, p) < 0.0) inside = false;
    dist2 = std::min(dist2, squared_distance_to_segment(p, a, b));
  }
  return inside ? std::sqrt(dist2) : -std::sqrt(dist2);
}

bool ConvexPolygon::inside_fan(Complex p, size_t* wedge) const {
  const size_t n = vertices_.size();
  const Complex o = vertices_[0];
  if (cross(o, vertices_[1], p) < 0.0) {
    *wedge = 0;
    return false;
  }
  if (cross(o, vertices_[n - 1], p) > 0.0) {
    *wedge = n - 1;
    return false;
  }
  // largest i with p left of (o, v_i)
  size_t lo = 1;
  size_t hi = n - 1;
  while (hi - lo > 1) {
    const size_t mid = (lo + hi) / 2;
    if (cross(o, vertices_[mid], p) >= 0.0)
      lo = mid;
    else
      hi = mid;
  }
  *wedge = lo;
  return cross(vertices_[lo], vertices_[lo + 1], p) >= 0.0;
}

double ConvexPolygon::outside_distance(Complex p, size_t* hint) const {
  const size_t n = vertices_.size();
  if (n < 3) return std::max(0.0, -signed_distance(p));
  size_t edge = 0;
  if (inside_fan(p, &edge)) return 0.0;
  auto edge_dist = [&](size_t i) { return squared_distance_to_segment(p, vertices_[i], vertices_[(i + 1) % n]); };
  double best = edge_dist(edge);
  if (hint != nullptr) {
    const double from_hint = edge_dist(*hint % n);
    if (from_hint < best) {
      best = from_hint;
      edge = *hint % n;
    }
  }
  for (const size_t step : {size_t{1}, n - 1}) {
    for (size_t walked = 0; walked < n; ++walked) {
      const size_t next = (edge + step) % n;
      const double d = edge_dist(next);
      if (d >= best) break;
      best = d;
      edge = next;
    }
  }
  if (hint != nullptr) *hint = edge;
  return std::sqrt(best);
}

std::vector<Complex> ConvexPolygon::sample_boundary(size_t count) const {
  std::vector<Complex> out;
  const size_t n = vertices_.size();
  if (n == 0 || count == 0) return out;
  if (n == 1) return {vertices_[0]};
  out.reserve(count);
  if (n == 2) {
    const Complex a = vertices_[0];
    const Complex b = vertices_[1];
    if (count == 1) return {a};
    for (size_t k = 0; k < count; ++k) out.push_back(a + (b - a) * (static_cast<double>(k) / (count - 1)));
    return out;
  }
  const double total = perimeter();
  const double spacing = total / static_cast<double>(count);
  size_t edge = 0;
  double edge_start = 0.0;
  double edge_len = length(vertices_[1] - vertices_[0]);
  for (size_t k = 0; k < count; ++k) {
    const double s = spacing * static_cast<double>(k);
    while (s > edge_start + edge_len && edge + 1 < n) {
      edge_start += edge_len;
      ++edge;
      edge_len = length(vertices_[(edge + 1) % n] - vertices_[edge]);
    }
    const Complex a = vertices_[edge];
    const Complex b = vertices_[(edge + 1) % n];
    const double t = edge_len > 0.0 ? std::clamp((s - edge_start) / edge_len, 0.0, 1.0) : 0.0;
    out.push_back(a + (b - a) * t);
  }
  return out;
}

ConvexPolygon ConvexPolygon::scaled(double factor) const {
  std::vector<Complex> v = vertices_;
  for (auto& z : v) z *= factor;
  if (factor < 0.0) return hull(std::move(v));
  return ConvexPolygon(std::move(v));
}

double ConvexPolygon::imaginary_axis_reach() const {
  const size_t n = vertices_.size();
  double reach = -1.0;
  if (n == 0) return reach;
  if (n == 1) return vertices_[0].real() == 0.0 ? std::abs(vertices_[0].imag()) : reach;
  const size_t edges = n == 2 ? 1 : n;
  for (size_t i = 0; i < edges; ++i) {
    const Complex a = vertices_[i];
    const Complex b = vertices_[(i + 1) % n];
    if (a.real() == 0.0) reach = std::max(reach, std::abs(a.imag()));
    if (b.real() == 0.0) reach = std::max(reach, std::abs(b.imag()));
    if ((a.real() < 0.0 && b.real() > 0.0) || (a.real() > 0.0 && b.real() < 0.0)) {
      const double t = a.real() / (a.real() - b.real());
      reach = std::max(reach, std::abs(a.imag() + t * (b.imag() - a.imag())));
    }
  }
  return reach;
}

double ConvexPolygon::min_turn() const {
  const size_t n = vertices_.size();
  if (n < 3) return 0.0;
  double worst = std::numeric_limits<double>::infinity();
  for (size_t i = 0; i < n; ++i) worst = std::min(worst, cross(vertices_[i], vertices_[(i + 1) % n], vertices_[(i + 2) % n]));
  return worst;
}

double nested_hausdorff(const ConvexPolygon& inner, const ConvexPolygon& outer) {
  double worst = 0.0;
  size_t hint = 0;
  for (const Complex v : outer.vertices()) worst = std::max(worst, inner.outside_distance(v, &hint));
  return worst;
}

double nested_hausdorff(const ConvexPolygon& inner, const ConvexPolygon& outer, const std::vector<size_t>& origin) {
  double worst = 0.0;
  size_t hint = 0;
  const auto& v = outer.vertices();
  for (size_t i = 0; i < v.size(); ++i) {
    if (origin[i] == ConvexPolygon::kNewVertex) worst = std::max(worst, inner.outside_distance(v[i], &hint));
  }
  return worst;
}

}  // namespace zerofree
