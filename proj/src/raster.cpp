#include "mifs/raster.hpp"

#include <algorithm>
#include <cerrno>
#include <cmath>
#include <cstring>
#include <fstream>
#include <numbers>

#include "mifs/errors.hpp"

namespace mifs {

Raster::Raster(int width, int height, Viewport viewport, Rgb fill)
    : width_(width), height_(height), viewport_(viewport) {
  if (width < 1 || height < 1) throw InvalidArgument("raster dimensions must be positive");
  if (!(viewport.x_max > viewport.x_min) || !(viewport.y_max > viewport.y_min))
    throw InvalidArgument("viewport must have positive extent on both axes");
  pixels_.assign(static_cast<std::size_t>(width) * static_cast<std::size_t>(height), fill);
}

std::size_t Raster::index(int col, int row) const {
  return static_cast<std::size_t>(row) * static_cast<std::size_t>(width_) + static_cast<std::size_t>(col);
}

std::optional<std::pair<int, int>> Raster::pixel_of(Point z) const {
  const double u = (z.real() - viewport_.x_min) / (viewport_.x_max - viewport_.x_min) * width_;
  const double v = (viewport_.y_max - z.imag()) / (viewport_.y_max - viewport_.y_min) * height_;
  if (!(u >= 0 && u < width_ && v >= 0 && v < height_)) return std::nullopt;
  const int col = std::min(static_cast<int>(std::floor(u)), width_ - 1);
  const int row = std::min(static_cast<int>(std::floor(v)), height_ - 1);
  return std::pair{col, row};
}

Point Raster::pixel_center(int col, int row) const {
  const double x = viewport_.x_min + (col + 0.5) / width_ * (viewport_.x_max - viewport_.x_min);
  const double y = viewport_.y_max - (row + 0.5) / height_ * (viewport_.y_max - viewport_.y_min);
  return {x, y};
}

Raster rasterize(const PointCloud& cloud, int width, int height, const Viewport& viewport) {
  Raster raster(width, height, viewport);
  for (const Point& z : cloud)
    if (const auto px = raster.pixel_of(z)) raster.set(px->first, px->second, kBlack);
  return raster;
}

Raster draw_circles(Raster raster, std::span<const Circle<double>> circles, std::uint8_t stroke) {
  const Rgb ink{stroke, stroke, stroke};
  const Viewport& vp = raster.viewport();
  const double pixel = std::min((vp.x_max - vp.x_min) / raster.width(), (vp.y_max - vp.y_min) / raster.height());

  for (const auto& circle : circles) {
    // Angular step of at most a quarter pixel along the arc, so consecutive
    // samples land in the same or adjacent pixels.
    const double circumference = 2 * std::numbers::pi * circle.radius;
    const auto samples = static_cast<std::size_t>(std::ceil(4 * circumference / pixel)) + 8;
    for (std::size_t k = 0; k < samples; ++k) {
      const double theta = 2 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(samples);
      if (const auto px = raster.pixel_of(circle.center + std::polar(circle.radius, theta)))
        raster.set(px->first, px->second, ink);
    }
    if (const auto px = raster.pixel_of(circle.center)) {
      for (int dr = -1; dr <= 1; ++dr) {
        for (int dc = -1; dc <= 1; ++dc) {
          const int col = px->first + dc, row = px->second + dr;
          if (col >= 0 && col < raster.width() && row >= 0 && row < raster.height()) raster.set(col, row, ink);
        }
      }
    }
  }
  return raster;
}

std::string encode_ppm(const Raster& raster) {
  std::string out = "P6\n" + std::to_string(raster.width()) + " " + std::to_string(raster.height()) + "\n255\n";
  out.reserve(out.size() + raster.pixels().size() * 3);
  for (const Rgb& px : raster.pixels())
    for (std::uint8_t channel : px) out.push_back(static_cast<char>(channel));
  return out;
}

void write_pnm(const Raster& raster, const std::filesystem::path& path) {
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw IoFailure("cannot open " + path.string() + ": " + std::strerror(errno));
  const std::string bytes = encode_ppm(raster);
  file.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  file.close();
  if (!file) throw IoFailure("failed writing " + path.string() + ": " + std::strerror(errno));
}

}  // namespace mifs
