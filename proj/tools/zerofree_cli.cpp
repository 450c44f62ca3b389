// Command-line front end over the C API.

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "zerofree/zerofree.h"

namespace {

using nlohmann::json;

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ApiError : std::runtime_error {
  ApiError(zf_status s, const std::string& what) : std::runtime_error(what), status(s) {}
  zf_status status;
};

void check(zf_status s) {
  if (s != ZF_OK) throw ApiError(s, std::string(zf_status_name(s)) + ": " + zf_last_error());
}

std::vector<double> parse_numbers(const std::string& text, size_t expected, const char* what) {
  std::vector<double> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      throw UsageError(std::string("bad number in ") + what + ": '" + item + "'");
    }
    if (used != item.size() || !std::isfinite(v)) throw UsageError(std::string("bad number in ") + what + ": '" + item + "'");
    out.push_back(v);
  }
  if (out.size() != expected) throw UsageError(std::string(what) + " needs " + std::to_string(expected) + " comma-separated numbers");
  return out;
}

zf_complex parse_lambda(const std::string& text) {
  if (text.find(',') == std::string::npos) return {parse_numbers(text, 1, "--lambda")[0], 0.0};
  const auto v = parse_numbers(text, 2, "--lambda");
  return {v[0], v[1]};
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

json complex_json(zf_complex z) { return json::array({z.re, z.im}); }

// Writes to the named file, or stdout for "" and "-".
class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty() && path != "-") {
      file_.open(path);
      if (!file_) throw ApiError(ZF_IO, "cannot open " + path);
    }
  }
  std::ostream& stream() { return file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout; }

 private:
  std::ofstream file_;
};

template <typename T, void (*Free)(T*)>
struct Deleter {
  void operator()(T* p) const { Free(p); }
};
using HullPtr = std::unique_ptr<zf_hull, Deleter<zf_hull, zf_hull_free>>;
using GraphPtr = std::unique_ptr<zf_graph, Deleter<zf_graph, zf_graph_free>>;
using PolyPtr = std::unique_ptr<zf_poly, Deleter<zf_poly, zf_poly_free>>;
using GSpecPtr = std::unique_ptr<zf_gspec, Deleter<zf_gspec, zf_gspec_free>>;
using RasterPtr = std::unique_ptr<zf_raster, Deleter<zf_raster, zf_raster_free>>;

std::vector<std::string> coefficients(const zf_poly* p) {
  std::vector<std::string> out;
  std::vector<char> buf(64);
  for (int k = 0; k <= zf_poly_degree(p); ++k) {
    zf_status s;
    while ((s = zf_poly_coefficient(p, static_cast<size_t>(k), buf.data(), buf.size())) == ZF_BUFFER_TOO_SMALL)
      buf.resize(buf.size() * 2);
    check(s);
    out.emplace_back(buf.data());
  }
  return out;
}

const char* kind_name(zf_extended_kind k) {
  switch (k) {
    case ZF_FINITE: return "finite";
    case ZF_INFINITY: return "infinity";
    case ZF_INDETERMINATE: return "indeterminate";
  }
  return "unknown";
}

struct OrbitFlags {
  zf_orbit_config cfg{};
  OrbitFlags() { zf_orbit_config_default(&cfg); }

  void attach(CLI::App* app) {
    app->add_option("--samples", cfg.boundary_samples, "boundary samples per hull iteration");
    app->add_option("--max-iter", cfg.max_iter, "iteration cap");
    app->add_option("--escape", cfg.escape_radius, "escape radius");
    app->add_option("--stab-tol", cfg.stab_tol, "stabilization tolerance");
    app->add_option("--interior-tol", cfg.interior_tol, "origin clearance, relative to the diameter, counted as interior");
  }
};

// ---- subcommands

struct CardioidCmd {
  std::string degree = "inf";
  int samples = 512;
  bool rescale = false;
  std::string out;

  int run() const {
    int d = ZF_DEGREE_INFINITE;
    if (degree != "inf") {
      size_t used = 0;
      try {
        d = std::stoi(degree, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used == 0 || used != degree.size()) throw UsageError("--degree takes an integer >= 2 or 'inf'");
    }
    if (samples < 3) throw UsageError("--samples must be at least 3");
    std::vector<zf_complex> pts(static_cast<size_t>(samples));
    check(zf_cardioid_boundary(d, samples, rescale ? 1 : 0, pts.data()));
    Output o(out);
    o.stream() << "re,im\n";
    for (const auto& z : pts) o.stream() << fmt(z.re) << ',' << fmt(z.im) << '\n';
    return 0;
  }
};

struct OrbitCmd {
  std::string lambda;
  OrbitFlags flags;
  std::string format = "json";

  int run() const {
    zf_hull* raw = nullptr;
    check(zf_hull_iterate(parse_lambda(lambda), &flags.cfg, &raw));
    HullPtr hull(raw);
    std::vector<zf_complex> verts(zf_hull_vertex_count(hull.get()));
    zf_hull_vertices(hull.get(), verts.data(), verts.size());
    const char* status = zf_hull_status_name(zf_hull_get_status(hull.get()));
    const char* membership = zf_membership_name(zf_hull_get_membership(hull.get()));
    if (format == "json") {
      json j;
      j["lambda"] = complex_json(parse_lambda(lambda));
      j["status"] = status;
      j["membership"] = membership;
      j["iterations"] = zf_hull_iterations(hull.get());
      j["origin_clearance"] = zf_hull_clearance(hull.get());
      j["diameter"] = zf_hull_diameter(hull.get());
      json v = json::array();
      for (const auto& z : verts) v.push_back(complex_json(z));
      j["vertices"] = std::move(v);
      std::cout << j.dump(2) << '\n';
    } else {
      std::cout << "# status=" << status << " membership=" << membership
                << " iterations=" << zf_hull_iterations(hull.get()) << " clearance=" << fmt(zf_hull_clearance(hull.get()))
                << " diameter=" << fmt(zf_hull_diameter(hull.get())) << '\n';
      std::cout << "re,im\n";
      for (const auto& z : verts) std::cout << fmt(z.re) << ',' << fmt(z.im) << '\n';
    }
    return 0;
  }
};

struct GammaCmd {
  double theta_max = 0.18;
  int steps = 100;
  std::string out;

  int run() const {
    if (steps < 1) throw UsageError("--steps must be positive");
    if (!(theta_max >= 0.0)) throw UsageError("--theta-max must be nonnegative");
    Output o(out);
    o.stream() << "theta,gamma,lambda_re,lambda_im,c,z_re,z_im,fixed_residual,mult_residual,ineq1_margin,ineq2_margin\n";
    for (int k = 0; k <= steps; ++k) {
      const double theta = theta_max * k / steps;
      zf_gamma_point p{};
      check(zf_gamma_point_at(theta, &p));
      double m1 = NAN;
      double m2 = NAN;
      // the margins are only defined for theta, gamma in (0, pi/2)
      if (zf_invariance_margins(theta, &m1, &m2, nullptr) != ZF_OK) m1 = m2 = NAN;
      o.stream() << fmt(p.theta) << ',' << fmt(p.gamma) << ',' << fmt(p.lambda_hat.re) << ',' << fmt(p.lambda_hat.im)
                 << ',' << fmt(p.c_hat) << ',' << fmt(p.z_hat.re) << ',' << fmt(p.z_hat.im) << ','
                 << fmt(p.fixed_residual) << ',' << fmt(p.multiplier_residual) << ',' << fmt(m1) << ',' << fmt(m2)
                 << '\n';
    }
    return 0;
  }
};

struct GraphCmd {
  std::string input;
  std::optional<std::string> lambda;
  bool roots = false;
  std::string format = "json";

  int run() const {
    zf_graph* raw = nullptr;
    check(zf_graph_load(input.c_str(), &raw));
    GraphPtr g(raw);
    zf_poly* in_raw = nullptr;
    zf_poly* out_raw = nullptr;
    check(zf_ratio_pair(g.get(), &in_raw, &out_raw));
    PolyPtr z_in(in_raw);
    PolyPtr z_out(out_raw);
    zf_poly* total_raw = nullptr;
    check(zf_ind_poly(g.get(), &total_raw));
    PolyPtr total(total_raw);

    json j;
    j["n"] = zf_graph_size(g.get());
    j["root"] = zf_graph_root(g.get());
    j["max_degree"] = zf_graph_max_degree(g.get());
    j["is_tree"] = zf_graph_is_tree(g.get()) != 0;
    j["coefficients"] = coefficients(total.get());
    j["z_in"] = coefficients(z_in.get());
    j["z_out"] = coefficients(z_out.get());
    if (lambda) {
      const zf_complex l = parse_lambda(*lambda);
      zf_extended_kind kind{};
      zf_complex r{};
      check(zf_ratio(g.get(), l, &kind, &r));
      zf_complex z{};
      check(zf_poly_evaluate(total.get(), l, &z));
      j["lambda"] = complex_json(l);
      j["ratio_kind"] = kind_name(kind);
      j["ratio"] = complex_json(r);
      j["z_value"] = complex_json(z);
    }
    std::vector<zf_complex> rs;
    if (roots) {
      size_t count = 0;
      rs.resize(static_cast<size_t>(std::max(0, zf_poly_degree(total.get()))));
      check(zf_poly_roots(total.get(), rs.data(), rs.size(), &count));
      json r = json::array();
      for (const auto& z : rs) r.push_back(complex_json(z));
      j["roots"] = std::move(r);
    }

    if (format == "json") {
      std::cout << j.dump(2) << '\n';
      return 0;
    }
    std::cout << "k,coefficient,z_in,z_out\n";
    const auto& c = j["coefficients"];
    for (size_t k = 0; k < c.size(); ++k) {
      auto at = [&](const json& a) { return k < a.size() ? a[k].get<std::string>() : std::string("0"); };
      std::cout << k << ',' << at(c) << ',' << at(j["z_in"]) << ',' << at(j["z_out"]) << '\n';
    }
    if (lambda) {
      std::cout << "\nlambda_re,lambda_im,ratio_kind,ratio_re,ratio_im\n"
                << fmt(j["lambda"][0]) << ',' << fmt(j["lambda"][1]) << ',' << j["ratio_kind"].get<std::string>() << ','
                << fmt(j["ratio"][0]) << ',' << fmt(j["ratio"][1]) << '\n';
    }
    if (roots) {
      std::cout << "\nroot_re,root_im\n";
      for (const auto& z : rs) std::cout << fmt(z.re) << ',' << fmt(z.im) << '\n';
    }
    return 0;
  }
};

struct ConvergeCmd {
  std::string spec;
  std::string lambda = "1,0";
  int dmax = 1000;
  std::string format = "csv";

  int run() const {
    if (dmax < 2) throw UsageError("--dmax must be at least 2");
    std::string text = spec;
    if (!text.empty() && text[0] == '@') {
      std::ifstream f(text.substr(1));
      if (!f) throw ApiError(ZF_IO, "cannot open " + text.substr(1));
      std::stringstream ss;
      ss << f.rdbuf();
      text = ss.str();
    }
    zf_gspec* raw = nullptr;
    check(zf_gspec_parse(text.c_str(), &raw));
    GSpecPtr g(raw);
    const zf_complex l = parse_lambda(lambda);
    // the degree-d tree realizes g o E_Lambda, whose value at 0 is g(Lambda)
    zf_complex target{};
    check(zf_gspec_eval(g.get(), l, l, &target));

    std::vector<int> ds;
    for (int d = 2; d < dmax; d *= 2) ds.push_back(d);
    ds.push_back(dmax);
    json rows = json::array();
    for (const int d : ds) {
      zf_graph* tree_raw = nullptr;
      check(zf_gspec_tree(g.get(), d, &tree_raw));
      GraphPtr tree(tree_raw);
      zf_extended_kind kind{};
      zf_complex v{};
      check(zf_rescaled_ratio(tree.get(), d, l, &kind, &v));
      const double err = kind == ZF_FINITE ? std::hypot(v.re - target.re, v.im - target.im) : INFINITY;
      rows.push_back({{"d", d}, {"vertices", zf_graph_size(tree.get())}, {"kind", kind_name(kind)},
                      {"value", complex_json(v)}, {"error", err}});
    }
    if (format == "json") {
      std::cout << json{{"lambda", complex_json(l)}, {"target", complex_json(target)}, {"rows", rows}}.dump(2) << '\n';
      return 0;
    }
    std::cout << "# target=" << fmt(target.re) << ',' << fmt(target.im) << '\n';
    std::cout << "d,vertices,kind,re,im,error\n";
    for (const auto& r : rows) {
      std::cout << r["d"].get<int>() << ',' << r["vertices"].get<size_t>() << ',' << r["kind"].get<std::string>() << ','
                << fmt(r["value"][0]) << ',' << fmt(r["value"][1]) << ',' << fmt(r["error"]) << '\n';
    }
    return 0;
  }
};

struct RasterCmd {
  std::string window;
  std::string size;
  std::string out;
  std::string csv;
  bool overlay = false;
  unsigned threads = 0;
  OrbitFlags flags;

  int run() const {
    zf_raster_config cfg{};
    zf_raster_config_default(&cfg);
    if (!window.empty()) {
      const auto w = parse_numbers(window, 4, "--window");
      cfg.re_min = w[0];
      cfg.re_max = w[1];
      cfg.im_min = w[2];
      cfg.im_max = w[3];
    }
    if (!size.empty()) {
      const auto x = size.find('x');
      if (x == std::string::npos) throw UsageError("--size takes WxH");
      try {
        size_t used_w = 0;
        size_t used_h = 0;
        const long w = std::stol(size.substr(0, x), &used_w);
        const long h = std::stol(size.substr(x + 1), &used_h);
        if (used_w != x || used_h != size.size() - x - 1 || w < 1 || h < 1) throw UsageError("");
        cfg.width = static_cast<size_t>(w);
        cfg.height = static_cast<size_t>(h);
      } catch (const std::exception&) {
        throw UsageError("--size takes WxH with positive integers");
      }
    }
    cfg.orbit = flags.cfg;
    cfg.threads = threads;
    if (out.empty() && csv.empty()) throw UsageError("raster needs --out and/or --csv");
    zf_raster* raw = nullptr;
    check(zf_raster_run(&cfg, &raw));
    RasterPtr r(raw);
    if (!out.empty()) check(zf_raster_write_ppm(r.get(), out.c_str(), overlay ? 1 : 0));
    if (!csv.empty()) check(zf_raster_write_csv(r.get(), csv.c_str()));
    return 0;
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"zero-free regions of the independence polynomial: cardioids, orbit hulls, Gamma, graphs, rasters"};
  app.require_subcommand(1);

  CardioidCmd cardioid;
  auto* c = app.add_subcommand("cardioid", "sample the boundary of C_d or C_inf");
  c->add_option("--degree", cardioid.degree, "degree d >= 2 or 'inf'");
  c->add_option("--samples", cardioid.samples, "number of boundary samples");
  c->add_flag("--rescale", cardioid.rescale, "multiply C_d by d");
  c->add_option("--out", cardioid.out, "CSV path (default stdout)");

  OrbitCmd orbit;
  auto* o = app.add_subcommand("orbit", "grow the orbit hull for one parameter");
  o->add_option("--lambda", orbit.lambda, "parameter re,im")->required();
  orbit.flags.attach(o);
  o->add_option("--out", orbit.format, "output format")->check(CLI::IsMember({"csv", "json"}));

  GammaCmd gamma;
  auto* gm = app.add_subcommand("gamma", "tabulate the boundary curve Gamma");
  gm->add_option("--theta-max", gamma.theta_max, "largest theta");
  gm->add_option("--steps", gamma.steps, "number of theta steps");
  gm->add_option("--out", gamma.out, "CSV path (default stdout)");

  GraphCmd graph;
  auto* gr = app.add_subcommand("graph", "independence polynomial, ratio and zeros of a rooted graph");
  gr->add_option("--input", graph.input, "adjacency list file")->required();
  gr->add_option("--lambda", graph.lambda, "evaluate the ratio at re,im");
  gr->add_flag("--roots", graph.roots, "compute all zeros");
  gr->add_option("--out", graph.format, "output format")->check(CLI::IsMember({"csv", "json"}));

  ConvergeCmd converge;
  auto* cv = app.add_subcommand("converge", "rescaled tree ratios against the semigroup limit");
  cv->add_option("--spec", converge.spec, "GSpec JSON, or @file")->required();
  cv->add_option("--lambda", converge.lambda, "parameter re,im");
  cv->add_option("--dmax", converge.dmax, "largest degree");
  cv->add_option("--out", converge.format, "output format")->check(CLI::IsMember({"csv", "json"}));

  RasterCmd raster;
  auto* rs = app.add_subcommand("raster", "classify a window of the parameter plane");
  rs->add_option("--window", raster.window, "re0,re1,im0,im1");
  rs->add_option("--size", raster.size, "WxH");
  rs->add_option("--out", raster.out, "PPM path");
  rs->add_option("--csv", raster.csv, "CSV path");
  rs->add_flag("--overlay-gamma", raster.overlay, "draw Gamma and its conjugate");
  rs->add_option("--threads", raster.threads, "worker threads (0 = all cores)");
  raster.flags.attach(rs);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*c) return cardioid.run();
    if (*o) return orbit.run();
    if (*gm) return gamma.run();
    if (*gr) return graph.run();
    if (*cv) return converge.run();
    if (*rs) return raster.run();
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ApiError& e) {
    std::cerr << "error: " << e.what() << '\n';
    const bool bad_input = e.status == ZF_CONFIG || e.status == ZF_INVALID_ARGUMENT || e.status == ZF_DOMAIN ||
                           e.status == ZF_PARSE || e.status == ZF_ARITY_MISMATCH;
    return bad_input ? kExitUsage : kExitFailure;
  }
  return kExitFailure;
}
