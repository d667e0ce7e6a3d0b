#include "mifs/render.hpp"

#include <vector>

namespace mifs {

PointCloud sample_attractor(const Mifs<double>& sys, const RenderSettings& settings) {
  if (settings.method == RenderMethod::Chaos)
    return chaos_game(sys, settings.points, settings.burn_in, settings.seed);
  IterationOptions options;
  options.max_points = settings.points;
  options.seed = settings.seed;
  return iterate_attractor(sys, PointCloud({Point(0)}), settings.iterations, settings.tol, options).cloud;
}

Raster render_attractor(const Mifs<double>& sys, const RenderSettings& settings) {
  return rasterize(sample_attractor(sys, settings), settings.width, settings.height, settings.viewport);
}

Raster render_disc_images(const Mifs<double>& sys, const RenderSettings& settings) {
  std::vector<Circle<double>> circles{unit_circle<double>()};
  for (const auto& cert : sys.maps()) circles.push_back(cert.image);
  return draw_circles(Raster(settings.width, settings.height, settings.viewport), circles);
}

}  // namespace mifs
