#include "zerofree/raster.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <thread>

#include "zerofree/cardioid.hpp"
#include "zerofree/error.hpp"
#include "zerofree/gamma_curve.hpp"

namespace zerofree {

const char* to_string(PixelClass c) {
  switch (c) {
    case PixelClass::Shearer: return "SHEARER";
    case PixelClass::SemiDisk: return "SEMIDISK";
    case PixelClass::Member: return "MEMBER";
    case PixelClass::GrayExcluded: return "GRAY_EXCLUDED";
    case PixelClass::EscapeExcluded: return "ESCAPE_EXCLUDED";
    case PixelClass::OutsideCardioid: return "OUTSIDE_CARDIOID";
    case PixelClass::Undecided: return "UNDECIDED";
  }
  return "UNKNOWN";
}

void RasterConfig::validate() const {
  const bool finite = std::isfinite(window.re_min) && std::isfinite(window.re_max) && std::isfinite(window.im_min) &&
                      std::isfinite(window.im_max);
  require(finite && window.re_min < window.re_max && window.im_min < window.im_max, ErrorCode::Config,
          "window must satisfy re_min < re_max and im_min < im_max");
  require(width >= 1 && height >= 1, ErrorCode::Config, "raster size must be at least 1x1");
  orbit.validate();
}

PixelResult classify_pixel(Complex lambda, const RasterConfig& cfg) {
  constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
  const auto enabled = [&](PixelClass c) { return cfg.classes_enabled.count(c) > 0; };
  const auto infinite = CardioidSpec::infinite();
  if (enabled(PixelClass::Shearer) && std::abs(lambda) < known_zero_free_radius(ZeroFreeDisk::Shearer, infinite))
    return {PixelClass::Shearer, kNaN, 0};
  if (enabled(PixelClass::SemiDisk) && lambda.real() > 0.0 &&
      std::abs(lambda) < known_zero_free_radius(ZeroFreeDisk::SemiDisk, infinite))
    return {PixelClass::SemiDisk, kNaN, 0};
  if (enabled(PixelClass::OutsideCardioid)) {
    const bool on_trace = lambda.imag() == 0.0 && lambda.real() >= -kInvE;
    if (!on_trace && !cardioid_contains(infinite, lambda)) return {PixelClass::OutsideCardioid, kNaN, 0};
  }
  const MembershipResult m = classify_membership_detailed(lambda, cfg.orbit);
  PixelResult out{PixelClass::Undecided, m.hull.origin_clearance, m.hull.iterations};
  switch (m.membership) {
    case Membership::Member: out.cls = PixelClass::Member; break;
    case Membership::ExcludedInterior: out.cls = PixelClass::GrayExcluded; break;
    case Membership::ExcludedEscape: out.cls = PixelClass::EscapeExcluded; break;
    case Membership::Undecided: out.cls = PixelClass::Undecided; break;
  }
  return out;
}

Complex RasterGrid::center(size_t x, size_t y) const {
  const double dx = (window.re_max - window.re_min) / static_cast<double>(width);
  const double dy = (window.im_max - window.im_min) / static_cast<double>(height);
  return {window.re_min + (static_cast<double>(x) + 0.5) * dx, window.im_max - (static_cast<double>(y) + 0.5) * dy};
}

bool RasterGrid::nearest_pixel(Complex z, size_t& x, size_t& y) const {
  if (z.real() < window.re_min || z.real() > window.re_max || z.imag() < window.im_min || z.imag() > window.im_max)
    return false;
  const double fx = (z.real() - window.re_min) / (window.re_max - window.re_min) * static_cast<double>(width);
  const double fy = (window.im_max - z.imag()) / (window.im_max - window.im_min) * static_cast<double>(height);
  x = std::min(static_cast<size_t>(fx), width - 1);
  y = std::min(static_cast<size_t>(fy), height - 1);
  return true;
}

RasterGrid raster(const RasterConfig& cfg) {
  cfg.validate();
  RasterGrid grid;
  grid.window = cfg.window;
  grid.width = cfg.width;
  grid.height = cfg.height;
  grid.pixels.resize(cfg.width * cfg.height);

  unsigned threads = cfg.threads != 0 ? cfg.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<size_t>(threads, cfg.height));
  std::atomic<size_t> next_row{0};
  auto work = [&] {
    for (size_t y = next_row++; y < cfg.height; y = next_row++) {
      for (size_t x = 0; x < cfg.width; ++x) grid.pixels[y * cfg.width + x] = classify_pixel(grid.center(x, y), cfg);
    }
  };
  if (threads <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  return grid;
}

Rgb palette(PixelClass c) {
  switch (c) {
    case PixelClass::Shearer: return {255, 220, 0};
    case PixelClass::SemiDisk: return {0, 170, 0};
    case PixelClass::Member: return {235, 235, 235};
    case PixelClass::GrayExcluded: return {128, 128, 128};
    case PixelClass::EscapeExcluded: return {200, 200, 200};
    case PixelClass::OutsideCardioid: return {255, 255, 255};
    case PixelClass::Undecided: return {255, 0, 255};
  }
  return {0, 0, 0};
}

std::vector<std::pair<size_t, size_t>> gamma_overlay_pixels(const RasterGrid& grid, double theta_min, double theta_max,
                                                             size_t samples) {
  require(samples >= 2 && theta_min <= theta_max, ErrorCode::InvalidArgument, "bad overlay sampling");
  std::vector<std::pair<size_t, size_t>> out;
  for (size_t k = 0; k < samples; ++k) {
    const double theta = theta_min + (theta_max - theta_min) * static_cast<double>(k) / static_cast<double>(samples - 1);
    const Complex lambda = gamma_point(theta).lambda_hat;
    size_t x = 0;
    size_t y = 0;
    if (grid.nearest_pixel(lambda, x, y)) out.emplace_back(x, y);
    if (grid.nearest_pixel(std::conj(lambda), x, y)) out.emplace_back(x, y);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<std::uint8_t> render_ppm(const RasterGrid& grid, bool overlay_gamma) {
  require(!grid.pixels.empty(), ErrorCode::EmptyInput, "empty grid");
  const std::string header = "P6\n" + std::to_string(grid.width) + " " + std::to_string(grid.height) + "\n255\n";
  std::vector<std::uint8_t> out(header.begin(), header.end());
  out.reserve(header.size() + 3 * grid.pixels.size());
  for (const auto& p : grid.pixels) {
    const Rgb c = palette(p.cls);
    out.insert(out.end(), c.begin(), c.end());
  }
  if (overlay_gamma) {
    for (const auto& [x, y] : gamma_overlay_pixels(grid)) {
      const size_t at = header.size() + 3 * (y * grid.width + x);
      std::copy(kGammaColor.begin(), kGammaColor.end(), out.begin() + static_cast<std::ptrdiff_t>(at));
    }
  }
  return out;
}

std::string export_csv(const RasterGrid& grid) {
  std::string out = "re,im,class,clearance,iterations\n";
  char line[160];
  for (size_t y = 0; y < grid.height; ++y) {
    for (size_t x = 0; x < grid.width; ++x) {
      const Complex z = grid.center(x, y);
      const PixelResult& p = grid.at(x, y);
      std::snprintf(line, sizeof line, "%.17g,%.17g,%s,%.17g,%zu\n", z.real(), z.imag(), to_string(p.cls), p.clearance,
                    p.iterations);
      out += line;
    }
  }
  return out;
}

void write_file(const std::string& path, const std::string& bytes) {
  std::ofstream file(path, std::ios::binary);
  if (!file) fail(ErrorCode::Io, "cannot open " + path + " for writing");
  file.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!file) fail(ErrorCode::Io, "write failed for " + path);
}

}  // namespace zerofree
