#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "mifs/attractor.hpp"
#include "mifs/circle.hpp"

namespace mifs {

/// Rectangle of the complex plane shown by a raster.
struct Viewport {
  double x_min = -1.1;
  double x_max = 1.1;
  double y_min = -1.1;
  double y_max = 1.1;

  friend bool operator==(const Viewport&, const Viewport&) = default;
};

using Rgb = std::array<std::uint8_t, 3>;

inline constexpr Rgb kWhite{255, 255, 255};
inline constexpr Rgb kBlack{0, 0, 0};

/// Row-major RGB pixel grid; row 0 is the top of the viewport.
class Raster {
 public:
  Raster(int width, int height, Viewport viewport, Rgb fill = kWhite);

  int width() const { return width_; }
  int height() const { return height_; }
  const Viewport& viewport() const { return viewport_; }

  const Rgb& at(int col, int row) const { return pixels_[index(col, row)]; }
  void set(int col, int row, Rgb value) { pixels_[index(col, row)] = value; }
  const std::vector<Rgb>& pixels() const { return pixels_; }

  /// Pixel (col, row) containing z, or nothing when z is outside the viewport.
  std::optional<std::pair<int, int>> pixel_of(Point z) const;

  /// Plane coordinates of the center of pixel (col, row).
  Point pixel_center(int col, int row) const;

  friend bool operator==(const Raster&, const Raster&) = default;

 private:
  std::size_t index(int col, int row) const;

  int width_;
  int height_;
  Viewport viewport_;
  std::vector<Rgb> pixels_;
};

/// Black points on white. col = floor((x - x_min) / (x_max - x_min) * width),
/// row = floor((y_max - y) / (y_max - y_min) * height).
Raster rasterize(const PointCloud& cloud, int width, int height, const Viewport& viewport = {});

/// Strokes each circle with a one-pixel outline and marks its center with a
/// 3x3 dot. Everything outside the viewport is clipped.
Raster draw_circles(Raster raster, std::span<const Circle<double>> circles, std::uint8_t stroke = 0);

/// Binary PPM: "P6\n<width> <height>\n255\n" then the RGB bytes row by row.
std::string encode_ppm(const Raster& raster);
void write_pnm(const Raster& raster, const std::filesystem::path& path);

}  // namespace mifs
