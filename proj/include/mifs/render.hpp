#pragma once

#include "mifs/attractor.hpp"
#include "mifs/config.hpp"
#include "mifs/raster.hpp"

namespace mifs {

/// Point cloud of the attractor as selected by settings.method.
PointCloud sample_attractor(const Mifs<double>& sys, const RenderSettings& settings);

Raster render_attractor(const Mifs<double>& sys, const RenderSettings& settings);

/// The unit circle together with the boundary of every phi_i(D), each with
/// its center dot.
Raster render_disc_images(const Mifs<double>& sys, const RenderSettings& settings);

}  // namespace mifs
