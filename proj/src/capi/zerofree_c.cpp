#include "zerofree/zerofree.h"

#include <cstring>
#include <new>
#include <string>

#include "zerofree/cardioid.hpp"
#include "zerofree/error.hpp"
#include "zerofree/finite_degree.hpp"
#include "zerofree/gamma_curve.hpp"
#include "zerofree/gspec_json.hpp"
#include "zerofree/raster.hpp"
#include "zerofree/semigroup.hpp"

struct zf_hull {
  zerofree::MembershipResult result;
};

struct zf_graph {
  zerofree::RootedGraph graph;
};

struct zf_poly {
  zerofree::IndPolynomial poly;
};

struct zf_gspec {
  zerofree::GSpec spec;
};

struct zf_raster {
  zerofree::RasterGrid grid;
};

namespace {

using zerofree::Complex;
using zerofree::ErrorCode;

thread_local std::string g_last_error;

zf_status to_status(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return ZF_INVALID_ARGUMENT;
    case ErrorCode::Domain: return ZF_DOMAIN;
    case ErrorCode::NoConvergence: return ZF_NO_CONVERGENCE;
    case ErrorCode::ArityMismatch: return ZF_ARITY_MISMATCH;
    case ErrorCode::Config: return ZF_CONFIG;
    case ErrorCode::TooLarge: return ZF_TOO_LARGE;
    case ErrorCode::Pole: return ZF_POLE;
    case ErrorCode::DegreeOverflow: return ZF_DEGREE_OVERFLOW;
    case ErrorCode::EmptyInput: return ZF_EMPTY_INPUT;
    case ErrorCode::Io: return ZF_IO;
    case ErrorCode::Parse: return ZF_PARSE;
    case ErrorCode::Failure: return ZF_FAILURE;
  }
  return ZF_INTERNAL;
}

zf_status set_error(zf_status status, const std::string& message) {
  g_last_error = message;
  return status;
}

template <typename F>
zf_status guarded(F&& body) {
  try {
    g_last_error.clear();
    body();
    return ZF_OK;
  } catch (const zerofree::Error& e) {
    return set_error(to_status(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return set_error(ZF_TOO_LARGE, "out of memory");
  } catch (const std::exception& e) {
    return set_error(ZF_INTERNAL, e.what());
  } catch (...) {
    return set_error(ZF_INTERNAL, "unknown exception");
  }
}

#define ZF_REQUIRE_ARG(cond) \
  do { \
    if (!(cond)) return set_error(ZF_INVALID_ARGUMENT, "invalid argument: " #cond); \
  } while (0)

Complex to_cpp(zf_complex z) { return {z.re, z.im}; }
zf_complex to_c(Complex z) { return {z.real(), z.imag()}; }

zerofree::CardioidSpec spec_for(int degree) {
  return degree == ZF_DEGREE_INFINITE ? zerofree::CardioidSpec::infinite() : zerofree::CardioidSpec::finite(degree);
}

zerofree::OrbitConfig orbit_from(const zf_orbit_config* cfg) {
  zerofree::OrbitConfig out;
  if (cfg == nullptr) return out;
  out.boundary_samples = cfg->boundary_samples;
  out.max_iter = cfg->max_iter;
  out.escape_radius = cfg->escape_radius;
  out.stab_tol = cfg->stab_tol;
  out.interior_tol = cfg->interior_tol;
  out.stop_on_interior = cfg->stop_on_interior != 0;
  return out;
}

void write_extended(const zerofree::ExtendedValue& v, zf_extended_kind* kind, zf_complex* value) {
  switch (v.kind) {
    case zerofree::ExtendedKind::Finite: *kind = ZF_FINITE; break;
    case zerofree::ExtendedKind::Infinity: *kind = ZF_INFINITY; break;
    case zerofree::ExtendedKind::Indeterminate: *kind = ZF_INDETERMINATE; break;
  }
  *value = to_c(v.value);
}

zf_membership membership_to_c(zerofree::Membership m) {
  switch (m) {
    case zerofree::Membership::Member: return ZF_MEMBER;
    case zerofree::Membership::ExcludedEscape: return ZF_EXCLUDED_ESCAPE;
    case zerofree::Membership::ExcludedInterior: return ZF_EXCLUDED_INTERIOR;
    case zerofree::Membership::Undecided: return ZF_UNDECIDED;
  }
  return ZF_UNDECIDED;
}

static_assert(static_cast<int>(zerofree::PixelClass::Undecided) == ZF_PIXEL_UNDECIDED,
              "pixel class order must match the C enum");

}  // namespace

extern "C" {

const char* zf_last_error(void) { return g_last_error.c_str(); }

const char* zf_status_name(zf_status status) {
  switch (status) {
    case ZF_OK: return "ok";
    case ZF_INVALID_ARGUMENT: return "invalid_argument";
    case ZF_DOMAIN: return "domain";
    case ZF_NO_CONVERGENCE: return "no_convergence";
    case ZF_ARITY_MISMATCH: return "arity_mismatch";
    case ZF_CONFIG: return "config";
    case ZF_TOO_LARGE: return "too_large";
    case ZF_POLE: return "pole";
    case ZF_DEGREE_OVERFLOW: return "degree_overflow";
    case ZF_EMPTY_INPUT: return "empty_input";
    case ZF_IO: return "io";
    case ZF_PARSE: return "parse";
    case ZF_FAILURE: return "failure";
    case ZF_BUFFER_TOO_SMALL: return "buffer_too_small";
    case ZF_INTERNAL: return "internal";
  }
  return "unknown";
}

const char* zf_version(void) { return "0.1.0"; }

// ---- cardioids

zf_status zf_cardioid_boundary(int degree, int n, int rescale, zf_complex* out) {
  ZF_REQUIRE_ARG(out != nullptr);
  return guarded([&] {
    const zerofree::SampledBoundary b = rescale != 0 && degree != ZF_DEGREE_INFINITE
                                            ? zerofree::rescaled_boundary(degree, n)
                                            : zerofree::cardioid_boundary(spec_for(degree), n);
    for (size_t i = 0; i < b.points.size(); ++i) out[i] = to_c(b.points[i]);
  });
}

zf_status zf_cardioid_contains(int degree, zf_complex lambda, int* inside, int* solver_failed) {
  ZF_REQUIRE_ARG(inside != nullptr);
  return guarded([&] {
    const auto m = zerofree::cardioid_contains(spec_for(degree), to_cpp(lambda));
    *inside = m.inside ? 1 : 0;
    if (solver_failed != nullptr) *solver_failed = m.solver_failed ? 1 : 0;
  });
}

zf_status zf_fixed_point(zf_complex lambda, zf_complex* point, zf_complex* multiplier) {
  ZF_REQUIRE_ARG(point != nullptr);
  return guarded([&] {
    const auto fp = zerofree::fixed_point(to_cpp(lambda));
    *point = to_c(fp.point);
    if (multiplier != nullptr) *multiplier = to_c(fp.multiplier);
  });
}

zf_status zf_known_radius(zf_disk kind, int degree, double* radius) {
  ZF_REQUIRE_ARG(radius != nullptr);
  ZF_REQUIRE_ARG(kind == ZF_DISK_SHEARER || kind == ZF_DISK_SEMIDISK);
  return guarded([&] {
    const auto k = kind == ZF_DISK_SHEARER ? zerofree::ZeroFreeDisk::Shearer : zerofree::ZeroFreeDisk::SemiDisk;
    *radius = zerofree::known_zero_free_radius(k, spec_for(degree));
  });
}

zf_status zf_real_interval(int degree, int trace, double* left, double* right) {
  ZF_REQUIRE_ARG(left != nullptr && right != nullptr);
  return guarded([&] {
    const auto iv = zerofree::real_interval(spec_for(degree), trace != 0);
    *left = iv.left;
    *right = iv.right;
  });
}

zf_status zf_hausdorff(const zf_complex* a, size_t na, const zf_complex* b, size_t nb, double* out) {
  ZF_REQUIRE_ARG(out != nullptr && (na == 0 || a != nullptr) && (nb == 0 || b != nullptr));
  return guarded([&] {
    zerofree::SampledBoundary sa;
    zerofree::SampledBoundary sb;
    for (size_t i = 0; i < na; ++i) sa.points.push_back(to_cpp(a[i]));
    for (size_t i = 0; i < nb; ++i) sb.points.push_back(to_cpp(b[i]));
    *out = zerofree::hausdorff_distance(sa, sb);
  });
}

// ---- orbit hulls

void zf_orbit_config_default(zf_orbit_config* cfg) {
  if (cfg == nullptr) return;
  const zerofree::OrbitConfig d;
  cfg->boundary_samples = d.boundary_samples;
  cfg->max_iter = d.max_iter;
  cfg->escape_radius = d.escape_radius;
  cfg->stab_tol = d.stab_tol;
  cfg->interior_tol = d.interior_tol;
  cfg->stop_on_interior = d.stop_on_interior ? 1 : 0;
}

zf_status zf_hull_iterate(zf_complex lambda, const zf_orbit_config* cfg, zf_hull** out) {
  ZF_REQUIRE_ARG(out != nullptr);
  *out = nullptr;
  return guarded([&] {
    *out = new zf_hull{zerofree::classify_membership_detailed(to_cpp(lambda), orbit_from(cfg))};
  });
}

void zf_hull_free(zf_hull* hull) { delete hull; }

zf_hull_status zf_hull_get_status(const zf_hull* hull) {
  switch (hull->result.hull.status) {
    case zerofree::HullStatus::Converged: return ZF_HULL_CONVERGED;
    case zerofree::HullStatus::Escaped: return ZF_HULL_ESCAPED;
    case zerofree::HullStatus::MaxIter: return ZF_HULL_MAX_ITER;
    case zerofree::HullStatus::OriginInterior: return ZF_HULL_ORIGIN_INTERIOR;
  }
  return ZF_HULL_MAX_ITER;
}

zf_membership zf_hull_get_membership(const zf_hull* hull) { return membership_to_c(hull->result.membership); }
size_t zf_hull_iterations(const zf_hull* hull) { return hull->result.hull.iterations; }
double zf_hull_clearance(const zf_hull* hull) { return hull->result.hull.origin_clearance; }
double zf_hull_diameter(const zf_hull* hull) { return hull->result.hull.diameter; }
size_t zf_hull_vertex_count(const zf_hull* hull) { return hull->result.hull.polygon.size(); }

size_t zf_hull_vertices(const zf_hull* hull, zf_complex* out, size_t cap) {
  const auto& v = hull->result.hull.polygon.vertices();
  const size_t n = v.size() < cap ? v.size() : cap;
  for (size_t i = 0; i < n; ++i) out[i] = to_c(v[i]);
  return n;
}

zf_status zf_classify(zf_complex lambda, const zf_orbit_config* cfg, zf_membership* out) {
  ZF_REQUIRE_ARG(out != nullptr);
  return guarded([&] { *out = membership_to_c(zerofree::classify_membership(to_cpp(lambda), orbit_from(cfg))); });
}

const char* zf_hull_status_name(zf_hull_status status) {
  switch (status) {
    case ZF_HULL_CONVERGED: return "converged";
    case ZF_HULL_ESCAPED: return "escaped";
    case ZF_HULL_MAX_ITER: return "max_iter";
    case ZF_HULL_ORIGIN_INTERIOR: return "origin_interior";
  }
  return "unknown";
}

const char* zf_membership_name(zf_membership m) {
  switch (m) {
    case ZF_MEMBER: return "MEMBER";
    case ZF_EXCLUDED_ESCAPE: return "EXCLUDED_ESCAPE";
    case ZF_EXCLUDED_INTERIOR: return "EXCLUDED_INTERIOR";
    case ZF_UNDECIDED: return "UNDECIDED";
  }
  return "UNKNOWN";
}

// ---- Gamma

zf_status zf_gamma_point_at(double theta, zf_gamma_point* out) {
  ZF_REQUIRE_ARG(out != nullptr);
  return guarded([&] {
    const auto p = zerofree::gamma_point(theta);
    const auto r = zerofree::verify_parabolic(p);
    *out = {p.theta, p.gamma, to_c(p.lambda_hat), p.c_hat, to_c(p.z_hat), r.fixed_residual, r.multiplier_residual};
  });
}

zf_status zf_invariance_margins(double theta, double* ineq1, double* ineq2, double* spiral_peak) {
  ZF_REQUIRE_ARG(ineq1 != nullptr && ineq2 != nullptr);
  return guarded([&] {
    const auto m = zerofree::invariance_margins(theta);
    *ineq1 = m.ineq1_margin;
    *ineq2 = m.ineq2_margin;
    if (spiral_peak != nullptr) *spiral_peak = m.spiral_peak;
  });
}

zf_status zf_theta_max(double resolution, double* out) {
  ZF_REQUIRE_ARG(out != nullptr && resolution > 0.0);
  return guarded([&] { *out = zerofree::theta_max_search(resolution); });
}

// ---- graphs

zf_status zf_graph_parse(const char* text, zf_graph** out) {
  ZF_REQUIRE_ARG(text != nullptr && out != nullptr);
  *out = nullptr;
  return guarded([&] { *out = new zf_graph{zerofree::parse_adjacency_list(text)}; });
}

zf_status zf_graph_load(const char* path, zf_graph** out) {
  ZF_REQUIRE_ARG(path != nullptr && out != nullptr);
  *out = nullptr;
  return guarded([&] { *out = new zf_graph{zerofree::load_adjacency_list(path)}; });
}

zf_status zf_graph_from_edges(size_t n, size_t root, const size_t* edges, size_t m, zf_graph** out) {
  ZF_REQUIRE_ARG(out != nullptr && (m == 0 || edges != nullptr));
  *out = nullptr;
  return guarded([&] {
    zerofree::RootedGraph g(n, root);
    for (size_t i = 0; i < m; ++i) g.add_edge(edges[2 * i], edges[2 * i + 1]);
    *out = new zf_graph{std::move(g)};
  });
}

void zf_graph_free(zf_graph* g) { delete g; }
size_t zf_graph_size(const zf_graph* g) { return g->graph.size(); }
size_t zf_graph_root(const zf_graph* g) { return g->graph.root(); }
size_t zf_graph_max_degree(const zf_graph* g) { return g->graph.max_degree(); }
int zf_graph_is_tree(const zf_graph* g) { return g->graph.is_tree() ? 1 : 0; }

zf_status zf_ind_poly(const zf_graph* g, zf_poly** out) {
  ZF_REQUIRE_ARG(g != nullptr && out != nullptr);
  *out = nullptr;
  return guarded([&] { *out = new zf_poly{zerofree::ind_poly(g->graph)}; });
}

zf_status zf_ratio_pair(const zf_graph* g, zf_poly** z_in, zf_poly** z_out) {
  ZF_REQUIRE_ARG(g != nullptr && z_in != nullptr && z_out != nullptr);
  *z_in = nullptr;
  *z_out = nullptr;
  return guarded([&] {
    auto pair = zerofree::ratio_pair(g->graph);
    auto* in = new zf_poly{std::move(pair.z_in)};
    try {
      *z_out = new zf_poly{std::move(pair.z_out)};
    } catch (...) {
      delete in;
      throw;
    }
    *z_in = in;
  });
}

void zf_poly_free(zf_poly* p) { delete p; }
int zf_poly_degree(const zf_poly* p) { return p->poly.degree(); }

zf_status zf_poly_coefficient(const zf_poly* p, size_t k, char* buf, size_t cap) {
  ZF_REQUIRE_ARG(p != nullptr && buf != nullptr);
  const std::string digits = p->poly.coefficient(k).str();
  if (digits.size() + 1 > cap) return set_error(ZF_BUFFER_TOO_SMALL, "coefficient needs " + std::to_string(digits.size() + 1) + " bytes");
  std::memcpy(buf, digits.c_str(), digits.size() + 1);
  return ZF_OK;
}

zf_status zf_poly_evaluate(const zf_poly* p, zf_complex lambda, zf_complex* out) {
  ZF_REQUIRE_ARG(p != nullptr && out != nullptr);
  return guarded([&] { *out = to_c(p->poly.evaluate(to_cpp(lambda))); });
}

zf_status zf_poly_roots(const zf_poly* p, zf_complex* out, size_t cap, size_t* count) {
  ZF_REQUIRE_ARG(p != nullptr && count != nullptr);
  const int degree = p->poly.degree();
  *count = degree > 0 ? static_cast<size_t>(degree) : 0;
  if (*count > cap || (*count > 0 && out == nullptr)) return set_error(ZF_BUFFER_TOO_SMALL, "root buffer too small");
  return guarded([&] {
    const auto roots = zerofree::poly_roots(p->poly);
    for (size_t i = 0; i < roots.size(); ++i) out[i] = to_c(roots[i]);
  });
}

zf_status zf_ratio(const zf_graph* g, zf_complex lambda, zf_extended_kind* kind, zf_complex* value) {
  ZF_REQUIRE_ARG(g != nullptr && kind != nullptr && value != nullptr);
  return guarded([&] { write_extended(zerofree::ratio(g->graph, to_cpp(lambda)), kind, value); });
}

zf_status zf_rescaled_ratio(const zf_graph* g, int d, zf_complex lambda, zf_extended_kind* kind, zf_complex* value) {
  ZF_REQUIRE_ARG(g != nullptr && kind != nullptr && value != nullptr);
  return guarded([&] { write_extended(zerofree::rescaled_ratio(g->graph, d, to_cpp(lambda)), kind, value); });
}

zf_status zf_compose_ratio(const zf_graph* h, const zf_graph* g, zf_complex lambda, zf_extended_kind* kind,
                           zf_complex* value) {
  ZF_REQUIRE_ARG(h != nullptr && g != nullptr && kind != nullptr && value != nullptr);
  return guarded([&] { write_extended(zerofree::compose_ratio(h->graph, g->graph, to_cpp(lambda)), kind, value); });
}

zf_status zf_substitute(const zf_graph* h, const zf_graph* g, zf_graph** out) {
  ZF_REQUIRE_ARG(h != nullptr && g != nullptr && out != nullptr);
  *out = nullptr;
  return guarded([&] { *out = new zf_graph{zerofree::substitute(h->graph, g->graph)}; });
}

// ---- GSpec

zf_status zf_gspec_parse(const char* json, zf_gspec** out) {
  ZF_REQUIRE_ARG(json != nullptr && out != nullptr);
  *out = nullptr;
  return guarded([&] { *out = new zf_gspec{zerofree::parse_gspec(json)}; });
}

void zf_gspec_free(zf_gspec* g) { delete g; }

zf_status zf_gspec_eval(const zf_gspec* g, zf_complex lambda, zf_complex z, zf_complex* out) {
  ZF_REQUIRE_ARG(g != nullptr && out != nullptr);
  return guarded([&] { *out = to_c(zerofree::eval_gspec(g->spec, to_cpp(lambda), to_cpp(z))); });
}

zf_status zf_gspec_tree(const zf_gspec* g, int d, zf_graph** out) {
  ZF_REQUIRE_ARG(g != nullptr && out != nullptr);
  *out = nullptr;
  return guarded([&] { *out = new zf_graph{zerofree::gspec_to_tree(g->spec, d)}; });
}

// ---- rasters

void zf_raster_config_default(zf_raster_config* cfg) {
  if (cfg == nullptr) return;
  const zerofree::RasterConfig d;
  cfg->re_min = d.window.re_min;
  cfg->re_max = d.window.re_max;
  cfg->im_min = d.window.im_min;
  cfg->im_max = d.window.im_max;
  cfg->width = d.width;
  cfg->height = d.height;
  zf_orbit_config_default(&cfg->orbit);
  cfg->threads = d.threads;
}

zf_status zf_raster_run(const zf_raster_config* cfg, zf_raster** out) {
  ZF_REQUIRE_ARG(cfg != nullptr && out != nullptr);
  *out = nullptr;
  return guarded([&] {
    zerofree::RasterConfig rc;
    rc.window = {cfg->re_min, cfg->re_max, cfg->im_min, cfg->im_max};
    rc.width = cfg->width;
    rc.height = cfg->height;
    rc.orbit = orbit_from(&cfg->orbit);
    rc.threads = cfg->threads;
    *out = new zf_raster{zerofree::raster(rc)};
  });
}

void zf_raster_free(zf_raster* r) { delete r; }
size_t zf_raster_width(const zf_raster* r) { return r->grid.width; }
size_t zf_raster_height(const zf_raster* r) { return r->grid.height; }

zf_pixel_class zf_raster_class(const zf_raster* r, size_t x, size_t y) {
  return static_cast<zf_pixel_class>(r->grid.at(x, y).cls);
}

zf_status zf_raster_write_ppm(const zf_raster* r, const char* path, int overlay_gamma) {
  ZF_REQUIRE_ARG(r != nullptr && path != nullptr);
  return guarded([&] {
    const auto bytes = zerofree::render_ppm(r->grid, overlay_gamma != 0);
    zerofree::write_file(path, std::string(bytes.begin(), bytes.end()));
  });
}

zf_status zf_raster_write_csv(const zf_raster* r, const char* path) {
  ZF_REQUIRE_ARG(r != nullptr && path != nullptr);
  return guarded([&] { zerofree::write_file(path, zerofree::export_csv(r->grid)); });
}

const char* zf_pixel_class_name(zf_pixel_class c) {
  if (c < ZF_PIXEL_SHEARER || c > ZF_PIXEL_UNDECIDED) return "UNKNOWN";
  return zerofree::to_string(static_cast<zerofree::PixelClass>(c));
}

}  // extern "C"
