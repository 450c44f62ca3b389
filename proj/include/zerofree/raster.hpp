#pragma once

// Parameter-plane sweeps: classify every pixel of a Lambda window against the
// known zero-free disks, the limit cardioid and the orbit-hull test, then
// write the grid as PPM or CSV.

#include <array>
#include <cstdint>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "zerofree/semigroup.hpp"

namespace zerofree {

enum class PixelClass { Shearer, SemiDisk, Member, GrayExcluded, EscapeExcluded, OutsideCardioid, Undecided };

const char* to_string(PixelClass c);

struct Window {
  double re_min = -0.6;
  double re_max = 3.0;
  double im_min = -1.6;
  double im_max = 1.6;
};

struct RasterConfig {
  Window window;
  size_t width = 600;
  size_t height = 400;
  OrbitConfig orbit;
  /// Shortcut classes; a disabled class falls through to the next test.
  std::set<PixelClass> classes_enabled{PixelClass::Shearer, PixelClass::SemiDisk, PixelClass::OutsideCardioid};
  /// 0 picks the hardware concurrency.
  unsigned threads = 0;

  void validate() const;
};

struct PixelResult {
  PixelClass cls = PixelClass::Undecided;
  /// Origin clearance of the final hull, NaN when no hull was computed.
  double clearance = 0.0;
  size_t iterations = 0;
};

/// Precedence: Shearer disk, right half of the 7pi/16 disk, outside the
/// cardioid and off the real trace [-1/e, inf), then the orbit-hull test.
PixelResult classify_pixel(Complex lambda, const RasterConfig& cfg);

struct RasterGrid {
  Window window;
  size_t width = 0;
  size_t height = 0;
  std::vector<PixelResult> pixels;  // row-major, row 0 at im_max

  const PixelResult& at(size_t x, size_t y) const { return pixels[y * width + x]; }
  Complex center(size_t x, size_t y) const;
  /// Pixel whose center is nearest to z, if z lies in the window.
  bool nearest_pixel(Complex z, size_t& x, size_t& y) const;
};

/// Deterministic for a fixed configuration regardless of thread count.
RasterGrid raster(const RasterConfig& cfg);

using Rgb = std::array<std::uint8_t, 3>;

Rgb palette(PixelClass c);
inline constexpr Rgb kGammaColor{255, 0, 0};

/// Pixels hit by the Gamma curve for theta in [theta_min, theta_max] and by its
/// conjugate.
std::vector<std::pair<size_t, size_t>> gamma_overlay_pixels(const RasterGrid& grid, double theta_min = 0.0,
                                                             double theta_max = 0.18, size_t samples = 4000);

std::vector<std::uint8_t> render_ppm(const RasterGrid& grid, bool overlay_gamma);

/// Columns re,im,class,clearance,iterations; one row per pixel.
std::string export_csv(const RasterGrid& grid);

/// Throws Io on failure.
void write_file(const std::string& path, const std::string& bytes);

}  // namespace zerofree
