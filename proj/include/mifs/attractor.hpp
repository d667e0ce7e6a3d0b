#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "mifs/generator.hpp"

namespace mifs {

using Point = std::complex<double>;

/// Non-empty finite planar point set. Clouds produced by hutchinson_step and
/// iterate_attractor are in canonical order (sorted by their 1e-12 grid
/// cell, then by real and imaginary part); chaos_game clouds are in orbit
/// order.
class PointCloud {
 public:
  explicit PointCloud(std::vector<Point> points);

  const std::vector<Point>& points() const { return points_; }
  std::size_t size() const { return points_.size(); }
  auto begin() const { return points_.begin(); }
  auto end() const { return points_.end(); }

 private:
  std::vector<Point> points_;
};

inline constexpr double kDedupeResolution = 1e-12;

/// Keeps one point per cell of the square grid of the given spacing (the
/// lexicographically smallest) and returns the survivors in canonical
/// order of that grid.
std::vector<Point> grid_unique(std::vector<Point> points, double resolution);

PointCloud canonicalize(std::vector<Point> points);

/// Largest of the two directed sup-inf distances. Exact on the finite sets;
/// a uniform-grid index replaces the quadratic scan.
double hausdorff_distance(const PointCloud& a, const PointCloud& b);

/// sup over a of the distance to b.
double directed_hausdorff(std::span<const Point> a, std::span<const Point> b);

/// One application of the set map Y -> phi_1(Y) u ... u phi_N(Y), deduplicated
/// at kDedupeResolution.
PointCloud hutchinson_step(const Mifs<double>& sys, const PointCloud& y);

struct IterationOptions {
  /// Hard cap on the cloud size; excess points are dropped uniformly at
  /// random with `seed`.
  std::size_t max_points = std::size_t{1} << 20;
  /// Spacing of the thinning grid (one representative per cell). Zero
  /// selects tol / 2.
  double thinning_cell = 0;
  std::uint64_t seed = 0;
};

struct AttractorResult {
  PointCloud cloud;
  int iterations_used = 0;
  /// Hausdorff distance between successive iterates, one entry per step.
  std::vector<double> step_distances;
  /// d_last / (1 - max_lipschitz): bound on the distance of the
  /// second-to-last iterate to the attractor (thinning not accounted for).
  double error_bound = 0;
};

/// Iterates the Hutchinson operator from y0 until two successive clouds are
/// closer than tol or max_iter steps have run.
AttractorResult iterate_attractor(const Mifs<double>& sys, const PointCloud& y0, int max_iter, double tol,
                                  const IterationOptions& options = {});

/// Random orbit from z = 0. The first burn_in points are discarded, the next
/// n_points are returned in generation order. Maps are picked uniformly
/// unless `weights` (one non-negative entry per map) is given.
PointCloud chaos_game(const Mifs<double>& sys, std::size_t n_points, std::size_t burn_in, std::uint64_t seed,
                      std::span<const double> weights = {});

/// Points e^{2 pi i k / n} for k = 0..n-1.
PointCloud unit_circle_points(std::size_t n);

}  // namespace mifs
