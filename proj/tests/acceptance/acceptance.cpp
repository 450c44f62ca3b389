// Acceptance suite: one line per criterion, nonzero exit if any fails.
//
//   zerofree_acceptance [--only 1,4,10] [--figure path.ppm]

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "../support/oracles.hpp"
#include "zerofree/cardioid.hpp"
#include "zerofree/corpus.hpp"
#include "zerofree/finite_degree.hpp"
#include "zerofree/gamma_curve.hpp"
#include "zerofree/raster.hpp"
#include "zerofree/semigroup.hpp"

using namespace zerofree;

namespace {

// ---- pinned tolerances and budgets

constexpr double kParabolicTol = 1e-9;
constexpr double kSpiralTol = 1e-10;
constexpr double kThetaClaim = 0.18;
constexpr double kRealGridStep = 1e-2;
constexpr double kHullTol = 1e-6;
constexpr double kCardioidHausdorffMax = 0.05;
constexpr double kRescaledSlack = 10.0;
constexpr double kRatioTol = 1e-10;
constexpr double kBracketDelta = 0.02;
constexpr double kGrayBandFraction = 0.10;
constexpr double kClosedCardioidTol = 1e-6;
constexpr double kShearerRootSlack = 1e-9;

struct Outcome {
  bool pass = false;
  std::string detail;
};

struct Criterion {
  int id;
  const char* name;
  double budget_seconds;
  std::function<Outcome()> run;
};

std::string fmt(const char* f, double a) {
  char buf[96];
  std::snprintf(buf, sizeof buf, f, a);
  return buf;
}

std::string figure_path = "figure1.ppm";

// ---- 1

Outcome parabolic_identities() {
  double worst_fixed = 0.0;
  double worst_mult = 0.0;
  for (int k = 0; k < 200; ++k) {
    const auto r = verify_parabolic(gamma_point(kThetaClaim * k / 199.0));
    worst_fixed = std::max(worst_fixed, r.fixed_residual);
    worst_mult = std::max(worst_mult, r.multiplier_residual);
  }
  return {worst_fixed < kParabolicTol && worst_mult < kParabolicTol,
          fmt("max |H(Z)-Z| = %.2e", worst_fixed) + fmt(", max |H'(Z)-1| = %.2e", worst_mult)};
}

// ---- 2

Outcome invariance_inequalities() {
  double worst1 = INFINITY;
  double worst2 = INFINITY;
  double worst_spiral = 0.0;
  for (int k = 1; k <= 180; ++k) {
    const double theta = 1e-3 * k;
    const auto m = invariance_margins(theta);
    worst1 = std::min(worst1, m.ineq1_margin);
    worst2 = std::min(worst2, m.ineq2_margin);
    worst_spiral = std::max(worst_spiral, std::abs(m.spiral_peak - (solve_gamma(theta) + theta)));
  }
  const double tmax = theta_max_search(1e-3);
  return {worst1 >= 0.0 && worst2 >= 0.0 && worst_spiral < kSpiralTol && tmax >= kThetaClaim,
          fmt("min margins %.4f", worst1) + fmt(" / %.4f", worst2) + fmt(", spiral error %.1e", worst_spiral) +
              fmt(", theta_max = %.3f", tmax)};
}

// ---- 3

Outcome real_axis() {
  size_t wrong = 0;
  double first_member = NAN;
  const int steps = static_cast<int>(std::lround((3.5 + 0.6) / kRealGridStep));
  for (int k = 0; k <= steps; ++k) {
    const double x = -0.6 + kRealGridStep * k;
    const bool member = classify_membership(Complex(x, 0.0)) == Membership::Member;
    if (member && std::isnan(first_member)) first_member = x;
    if (std::abs(x + kInvE) <= kRealGridStep) continue;  // either answer is allowed next to -1/e
    if (member != (x >= -kInvE)) ++wrong;
  }
  return {wrong == 0, std::to_string(steps + 1) + " points, " + std::to_string(wrong) + " misclassified" +
                          fmt(", members start at %.2f", first_member)};
}

// ---- 4

double w_minus_02(double x) { return -0.2 * std::exp(-x) - x; }

Outcome hull_ground_truth() {
  const auto one = hull_iterate(1.0);
  double off = 0.0;
  double lo = INFINITY;
  double hi = -INFINITY;
  for (const auto v : one.polygon.vertices()) {
    off = std::max(off, distance_to_segment(v, 0.0, 1.0));
    lo = std::min(lo, v.real());
    hi = std::max(hi, v.real());
  }
  const double seg_err = std::max({off, std::abs(lo), std::abs(hi - 1.0)});

  const double w = oracle::bisect(w_minus_02, -1.0, 0.0);
  const auto neg = hull_iterate(-0.2);
  double left = 0.0;
  double width = 0.0;
  for (const auto v : neg.polygon.vertices()) {
    left = std::min(left, v.real());
    width = std::max(width, std::abs(v.imag()));
  }
  const bool ok = one.status == HullStatus::Converged && neg.status == HullStatus::Converged && seg_err < kHullTol &&
                  std::abs(left - w) < kHullTol && width < kHullTol;
  return {ok, fmt("[0,1] error %.1e", seg_err) + fmt(", left end %.9f", left) + fmt(" vs oracle %.9f", w)};
}

// ---- 5

Outcome known_disks() {
  std::mt19937_64 rng(20240501);
  const double semi = 7.0 * kPi / 16.0;
  size_t failures = 0;
  Complex example;
  for (int k = 0; k < 10000; ++k) {
    Complex l;
    if (k % 2 == 0) {
      l = oracle::in_disk(rng, kInvE);
    } else {
      do l = oracle::in_disk(rng, semi);
      while (l.real() <= 0.0);
    }
    if (classify_membership(l) != Membership::Member) {
      if (failures++ == 0) example = l;
    }
  }
  std::string detail = "10000 samples, " + std::to_string(failures) + " not MEMBER";
  if (failures > 0) detail += fmt(" (e.g. %.6f", example.real()) + fmt("%+.6fi)", example.imag());
  return {failures == 0, detail};
}

// ---- 6

Outcome cardioid_convergence() {
  const auto lim = cardioid_boundary(CardioidSpec::infinite(), 2048);
  std::vector<double> h;
  std::string detail;
  for (const int d : {50, 100, 200, 400}) {
    h.push_back(hausdorff_distance(rescaled_boundary(d, 2048), lim));
    detail += (detail.empty() ? "" : ", ") + std::string("d=") + std::to_string(d) + fmt(": %.4f", h.back());
  }
  const bool monotone = std::is_sorted(h.rbegin(), h.rend()) && std::adjacent_find(h.begin(), h.end()) == h.end();
  return {monotone && h.back() < kCardioidHausdorffMax, detail};
}

// ---- 7

Outcome rescaled_convergence() {
  const GSpec e = GSpec::exponential();
  const GSpec specs[] = {
      e,
      GSpec::compose(WeightTuple({0.5}), {e}),
      GSpec::compose(WeightTuple({0.5, 0.5}), {e, GSpec::identity()}),
      GSpec::compose(WeightTuple({0.3, 0.3, 0.4}), {e, e, GSpec::identity()}),
      GSpec::compose(WeightTuple({0.7}), {GSpec::compose(WeightTuple({0.02}), {GSpec::compose(WeightTuple({0.02}), {GSpec::identity()})})}),
  };
  const Complex lambdas[] = {Complex(1.0, 0.0), Complex(1.0, 1.0), 2.0 * Complex(0.0, 1.0) * 0.5};
  double worst_ratio = 0.0;
  bool ok = true;
  for (const auto& g : specs) {
    const auto t100 = gspec_to_tree(g, 100);
    const auto t1000 = gspec_to_tree(g, 1000);
    for (const Complex l : lambdas) {
      const Complex target = eval_gspec(g, l, l);
      const auto r100 = rescaled_ratio(t100, 100, l);
      const auto r1000 = rescaled_ratio(t1000, 1000, l);
      if (!r100.finite() || !r1000.finite()) {
        ok = false;
        continue;
      }
      const double fitted_c = 100.0 * std::abs(r100.value - target);
      const double predicted = fitted_c / 1000.0;
      const double err = std::abs(r1000.value - target);
      const double ratio = predicted > 0.0 ? err / predicted : (err == 0.0 ? 0.0 : INFINITY);
      worst_ratio = std::max(worst_ratio, ratio);
      if (!(err < kRescaledSlack * predicted || err == 0.0)) ok = false;
    }
  }
  return {ok, fmt("worst error / (C/d) at d=1000: %.3f", worst_ratio)};
}

// ---- 8

Outcome oracle_equivalence() {
  size_t trees = 0;
  size_t mismatches = 0;
  for (const auto& t : rooted_trees_up_to(9)) {
    ++trees;
    if (oracle::as_u64(ind_poly(t)) != oracle::brute_force_counts(t)) ++mismatches;
  }
  std::mt19937_64 rng(99);
  for (int i = 0; i < 500; ++i) {
    const auto g = random_bounded_graph(oracle::pick(rng, 1, 14), oracle::pick(rng, 2, 5), oracle::pick(rng, 0, 6), rng);
    if (oracle::as_u64(ind_poly(g)) != oracle::brute_force_counts(g)) ++mismatches;
  }
  double f_err = 0.0;
  for (int i = 0; i < 200; ++i) {
    const int d = static_cast<int>(oracle::pick(rng, 2, 5));
    const auto spec = oracle::random_fspec(rng, d, 3);
    const Complex l = oracle::in_disk(rng, 0.3);
    f_err = std::max(f_err, std::abs(f_eval(spec, d, l, 0.0) - ratio(fspec_to_tree(spec), l).value));
  }
  double c_err = 0.0;
  for (int i = 0; i < 50; ++i) {
    const auto h = random_bounded_graph(oracle::pick(rng, 1, 4), 3, oracle::pick(rng, 0, 2), rng);
    const auto g = random_bounded_graph(oracle::pick(rng, 1, 4), 3, oracle::pick(rng, 0, 2), rng);
    const Complex l = oracle::in_disk(rng, 0.5);
    const auto composed = compose_ratio(h, g, l);
    c_err = std::max(c_err, composed.finite() ? std::abs(composed.value - oracle::brute_force_ratio(substitute(h, g), l))
                                              : INFINITY);
  }
  return {mismatches == 0 && f_err < kRatioTol && c_err < kRatioTol,
          std::to_string(trees) + " trees + 500 graphs, " + std::to_string(mismatches) + " mismatches" +
              fmt(", F error %.1e", f_err) + fmt(", compose error %.1e", c_err)};
}

// ---- 9

Outcome gamma_bracketing() {
  bool ok = true;
  std::string detail;
  for (const double theta : {0.05, 0.10, 0.15}) {
    const Complex l = gamma_point(theta).lambda_hat;
    const auto inner = classify_membership((1.0 - kBracketDelta) * l);
    const auto outer = classify_membership((1.0 + kBracketDelta) * l);
    ok = ok && inner == Membership::Member && outer != Membership::Member;
    detail += (detail.empty() ? "" : "; ") + fmt("%.2f: ", theta) + to_string(inner) + " / " + to_string(outer);
  }
  return {ok, detail};
}

// ---- 10

Outcome figure_reproduction() {
  const RasterConfig cfg;
  const RasterGrid grid = raster(cfg);
  const auto boundary = cardioid_boundary(CardioidSpec::infinite(), 16384).points;
  auto nearest = [&](Complex z) {
    size_t best = 0;
    double d = INFINITY;
    for (size_t i = 0; i < boundary.size(); ++i) {
      const double di = std::abs(z - boundary[i]);
      if (di < d) {
        d = di;
        best = i;
      }
    }
    // distance to the polyline through the nearest sample
    const size_t n = boundary.size();
    const double seg = std::min(distance_to_segment(z, boundary[best], boundary[(best + 1) % n]),
                                distance_to_segment(z, boundary[best], boundary[(best + n - 1) % n]));
    return std::pair<double, Complex>{seg, boundary[best]};
  };

  size_t gray = 0;
  size_t gray_far = 0;
  size_t stray_members = 0;
  size_t counts[7] = {};
  for (size_t y = 0; y < grid.height; ++y) {
    for (size_t x = 0; x < grid.width; ++x) {
      const PixelClass c = grid.at(x, y).cls;
      ++counts[static_cast<int>(c)];
      const Complex z = grid.center(x, y);
      if (c == PixelClass::GrayExcluded) {
        ++gray;
        const auto [dist, b] = nearest(z);
        if (dist > kGrayBandFraction * std::abs(b)) ++gray_far;
      } else if (c == PixelClass::Member) {
        const bool on_trace = z.imag() == 0.0 && z.real() >= -kInvE;
        if (!on_trace && !cardioid_contains(CardioidSpec::infinite(), z).inside && nearest(z).first > kClosedCardioidTol)
          ++stray_members;
      }
    }
  }
  const auto bytes = render_ppm(grid, true);
  write_file(figure_path, std::string(bytes.begin(), bytes.end()));
  std::ostringstream detail;
  detail << "gray " << gray << " (" << gray_far << " outside the band), stray members " << stray_members << "; counts";
  for (int i = 0; i < 7; ++i) detail << ' ' << to_string(static_cast<PixelClass>(i)) << '=' << counts[i];
  detail << "; image " << figure_path;
  return {gray > 0 && gray_far == 0 && stray_members == 0, detail.str()};
}

// ---- 11

Outcome shearer_roots() {
  const double radius = known_zero_free_radius(ZeroFreeDisk::Shearer, CardioidSpec::finite(2));
  std::vector<RootedGraph> corpus;
  for (const auto& t : rooted_trees_up_to(9))
    if (t.max_degree() <= 3) corpus.push_back(t);
  std::mt19937_64 rng(2718);
  for (int i = 0; i < 300; ++i) corpus.push_back(random_bounded_graph(oracle::pick(rng, 2, 14), 3, oracle::pick(rng, 0, 5), rng));
  for (int i = 0; i < 100; ++i) corpus.push_back(random_tree(oracle::pick(rng, 10, 40), 3, rng));
  double smallest = INFINITY;
  size_t roots = 0;
  for (const auto& g : corpus) {
    for (const auto r : poly_roots(ind_poly(g))) {
      smallest = std::min(smallest, std::abs(r));
      ++roots;
    }
  }
  return {smallest >= radius - kShearerRootSlack,
          std::to_string(corpus.size()) + " graphs, " + std::to_string(roots) + " roots" +
              fmt(", min |root| = %.6f", smallest) + fmt(" vs 4/27 = %.6f", radius)};
}

std::set<int> parse_only(const std::string& s) {
  std::set<int> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) out.insert(std::stoi(item));
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  std::set<int> only;
  for (int i = 1; i + 1 < argc; i += 2) {
    const std::string flag = argv[i];
    if (flag == "--only") only = parse_only(argv[i + 1]);
    else if (flag == "--figure") figure_path = argv[i + 1];
  }

  const std::vector<Criterion> criteria = {
      {1, "parabolic identities along Gamma", 1.0, parabolic_identities},
      {2, "invariance inequalities up to theta = 0.18", 1.0, invariance_inequalities},
      {3, "real-axis classification", 30.0, real_axis},
      {4, "hull ground truth", 5.0, hull_ground_truth},
      {5, "known zero-free disks are members", 300.0, known_disks},
      {6, "rescaled cardioids converge", 1.0, cardioid_convergence},
      {7, "rescaled ratios converge like 1/d", 30.0, rescaled_convergence},
      {8, "oracle equivalence", 120.0, oracle_equivalence},
      {9, "Gamma brackets the boundary", 10.0, gamma_bracketing},
      {10, "600x400 parameter-plane raster", 900.0, figure_reproduction},
      {11, "roots avoid the d = 2 Shearer disk", 60.0, shearer_roots},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    if (!only.empty() && only.count(c.id) == 0) continue;
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_budget = seconds < c.budget_seconds;
    const bool pass = out.pass && in_budget;
    failed += pass ? 0 : 1;
    std::printf("[%s] %2d %s: %s (%.2f s of %.0f s)%s\n", pass ? "PASS" : "FAIL", c.id, c.name, out.detail.c_str(), seconds,
                c.budget_seconds, in_budget ? "" : " over budget");
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
