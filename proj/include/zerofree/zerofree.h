#ifndef ZEROFREE_ZEROFREE_H
#define ZEROFREE_ZEROFREE_H

/* C interface to the zerofree library. Objects are opaque handles released
 * with the matching *_free function; every fallible call returns a zf_status
 * and leaves a message for zf_last_error() on the calling thread. */

#include <stddef.h>

#if defined(_WIN32)
#if defined(ZEROFREE_BUILDING)
#define ZF_API __declspec(dllexport)
#else
#define ZF_API __declspec(dllimport)
#endif
#else
#define ZF_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum zf_status {
  ZF_OK = 0,
  ZF_INVALID_ARGUMENT = 1,
  ZF_DOMAIN = 2,
  ZF_NO_CONVERGENCE = 3,
  ZF_ARITY_MISMATCH = 4,
  ZF_CONFIG = 5,
  ZF_TOO_LARGE = 6,
  ZF_POLE = 7,
  ZF_DEGREE_OVERFLOW = 8,
  ZF_EMPTY_INPUT = 9,
  ZF_IO = 10,
  ZF_PARSE = 11,
  ZF_FAILURE = 12,
  ZF_BUFFER_TOO_SMALL = 13,
  ZF_INTERNAL = 99
} zf_status;

typedef struct zf_complex {
  double re;
  double im;
} zf_complex;

/* Message for the last failed call on this thread ("" after success). */
ZF_API const char* zf_last_error(void);
ZF_API const char* zf_status_name(zf_status status);
ZF_API const char* zf_version(void);

/* ---- cardioids ---------------------------------------------------------- */

/* Degree argument: d >= 2, or ZF_DEGREE_INFINITE for the limit cardioid. */
#define ZF_DEGREE_INFINITE 0

/* Writes n samples of the boundary; rescale multiplies a finite cardioid by d. */
ZF_API zf_status zf_cardioid_boundary(int degree, int n, int rescale, zf_complex* out);
ZF_API zf_status zf_cardioid_contains(int degree, zf_complex lambda, int* inside, int* solver_failed);
ZF_API zf_status zf_fixed_point(zf_complex lambda, zf_complex* point, zf_complex* multiplier);

typedef enum zf_disk { ZF_DISK_SHEARER = 0, ZF_DISK_SEMIDISK = 1 } zf_disk;
ZF_API zf_status zf_known_radius(zf_disk kind, int degree, double* radius);

/* Real trace of the cardioid, or of the bounded-orbit set when trace != 0. */
ZF_API zf_status zf_real_interval(int degree, int trace, double* left, double* right);
ZF_API zf_status zf_hausdorff(const zf_complex* a, size_t na, const zf_complex* b, size_t nb, double* out);

/* ---- orbit hulls -------------------------------------------------------- */

typedef struct zf_orbit_config {
  size_t boundary_samples;
  size_t max_iter;
  double escape_radius;
  double stab_tol;
  double interior_tol;
  int stop_on_interior;
} zf_orbit_config;

ZF_API void zf_orbit_config_default(zf_orbit_config* cfg);

typedef enum zf_hull_status {
  ZF_HULL_CONVERGED = 0,
  ZF_HULL_ESCAPED = 1,
  ZF_HULL_MAX_ITER = 2,
  ZF_HULL_ORIGIN_INTERIOR = 3
} zf_hull_status;

typedef enum zf_membership {
  ZF_MEMBER = 0,
  ZF_EXCLUDED_ESCAPE = 1,
  ZF_EXCLUDED_INTERIOR = 2,
  ZF_UNDECIDED = 3
} zf_membership;

typedef struct zf_hull zf_hull;

/* cfg may be NULL for the defaults. */
ZF_API zf_status zf_hull_iterate(zf_complex lambda, const zf_orbit_config* cfg, zf_hull** out);
ZF_API void zf_hull_free(zf_hull* hull);
ZF_API zf_hull_status zf_hull_get_status(const zf_hull* hull);
ZF_API zf_membership zf_hull_get_membership(const zf_hull* hull);
ZF_API size_t zf_hull_iterations(const zf_hull* hull);
ZF_API double zf_hull_clearance(const zf_hull* hull);
ZF_API double zf_hull_diameter(const zf_hull* hull);
ZF_API size_t zf_hull_vertex_count(const zf_hull* hull);
/* Copies min(cap, count) vertices in counterclockwise order. */
ZF_API size_t zf_hull_vertices(const zf_hull* hull, zf_complex* out, size_t cap);

ZF_API zf_status zf_classify(zf_complex lambda, const zf_orbit_config* cfg, zf_membership* out);
ZF_API const char* zf_hull_status_name(zf_hull_status status);
ZF_API const char* zf_membership_name(zf_membership m);

/* ---- the Gamma curve ---------------------------------------------------- */

typedef struct zf_gamma_point {
  double theta;
  double gamma;
  zf_complex lambda_hat;
  double c_hat;
  zf_complex z_hat;
  double fixed_residual;
  double multiplier_residual;
} zf_gamma_point;

ZF_API zf_status zf_gamma_point_at(double theta, zf_gamma_point* out);
ZF_API zf_status zf_invariance_margins(double theta, double* ineq1, double* ineq2, double* spiral_peak);
ZF_API zf_status zf_theta_max(double resolution, double* out);

/* ---- finite graphs ------------------------------------------------------ */

typedef struct zf_graph zf_graph;
typedef struct zf_poly zf_poly;
typedef struct zf_gspec zf_gspec;

/* Adjacency-list text: "n root" on the first line, then the neighbors of
 * vertex i on line i + 1. */
ZF_API zf_status zf_graph_parse(const char* text, zf_graph** out);
ZF_API zf_status zf_graph_load(const char* path, zf_graph** out);
/* edges holds m pairs (a, b). */
ZF_API zf_status zf_graph_from_edges(size_t n, size_t root, const size_t* edges, size_t m, zf_graph** out);
ZF_API void zf_graph_free(zf_graph* g);
ZF_API size_t zf_graph_size(const zf_graph* g);
ZF_API size_t zf_graph_root(const zf_graph* g);
ZF_API size_t zf_graph_max_degree(const zf_graph* g);
ZF_API int zf_graph_is_tree(const zf_graph* g);

ZF_API zf_status zf_ind_poly(const zf_graph* g, zf_poly** out);
ZF_API zf_status zf_ratio_pair(const zf_graph* g, zf_poly** z_in, zf_poly** z_out);
ZF_API void zf_poly_free(zf_poly* p);
/* -1 for the zero polynomial. */
ZF_API int zf_poly_degree(const zf_poly* p);
/* Decimal digits of coefficient k, NUL-terminated. */
ZF_API zf_status zf_poly_coefficient(const zf_poly* p, size_t k, char* buf, size_t cap);
ZF_API zf_status zf_poly_evaluate(const zf_poly* p, zf_complex lambda, zf_complex* out);
/* Writes degree roots sorted by (re, im); *count receives the degree. */
ZF_API zf_status zf_poly_roots(const zf_poly* p, zf_complex* out, size_t cap, size_t* count);

typedef enum zf_extended_kind { ZF_FINITE = 0, ZF_INFINITY = 1, ZF_INDETERMINATE = 2 } zf_extended_kind;

ZF_API zf_status zf_ratio(const zf_graph* g, zf_complex lambda, zf_extended_kind* kind, zf_complex* value);
ZF_API zf_status zf_rescaled_ratio(const zf_graph* g, int d, zf_complex lambda, zf_extended_kind* kind,
                                   zf_complex* value);
/* R_H(R_G(lambda)). The degree budget of the implementation construction is
 * the caller's responsibility. */
ZF_API zf_status zf_compose_ratio(const zf_graph* h, const zf_graph* g, zf_complex lambda, zf_extended_kind* kind,
                                  zf_complex* value);
ZF_API zf_status zf_substitute(const zf_graph* h, const zf_graph* g, zf_graph** out);

/* ---- semigroup elements ------------------------------------------------- */

/* "id" or {"weights": [...], "children": [...]}. */
ZF_API zf_status zf_gspec_parse(const char* json, zf_gspec** out);
ZF_API void zf_gspec_free(zf_gspec* g);
ZF_API zf_status zf_gspec_eval(const zf_gspec* g, zf_complex lambda, zf_complex z, zf_complex* out);
/* Tree realizing g o E_Lambda at degree d. */
ZF_API zf_status zf_gspec_tree(const zf_gspec* g, int d, zf_graph** out);

/* ---- parameter-plane rasters -------------------------------------------- */

typedef enum zf_pixel_class {
  ZF_PIXEL_SHEARER = 0,
  ZF_PIXEL_SEMIDISK = 1,
  ZF_PIXEL_MEMBER = 2,
  ZF_PIXEL_GRAY_EXCLUDED = 3,
  ZF_PIXEL_ESCAPE_EXCLUDED = 4,
  ZF_PIXEL_OUTSIDE_CARDIOID = 5,
  ZF_PIXEL_UNDECIDED = 6
} zf_pixel_class;

typedef struct zf_raster_config {
  double re_min;
  double re_max;
  double im_min;
  double im_max;
  size_t width;
  size_t height;
  zf_orbit_config orbit;
  /* 0 uses the hardware concurrency. */
  unsigned threads;
} zf_raster_config;

typedef struct zf_raster zf_raster;

ZF_API void zf_raster_config_default(zf_raster_config* cfg);
ZF_API zf_status zf_raster_run(const zf_raster_config* cfg, zf_raster** out);
ZF_API void zf_raster_free(zf_raster* r);
ZF_API size_t zf_raster_width(const zf_raster* r);
ZF_API size_t zf_raster_height(const zf_raster* r);
/* Row 0 is the top of the window (largest imaginary part). */
ZF_API zf_pixel_class zf_raster_class(const zf_raster* r, size_t x, size_t y);
ZF_API zf_status zf_raster_write_ppm(const zf_raster* r, const char* path, int overlay_gamma);
ZF_API zf_status zf_raster_write_csv(const zf_raster* r, const char* path);
ZF_API const char* zf_pixel_class_name(zf_pixel_class c);

#ifdef __cplusplus
}
#endif

#endif
