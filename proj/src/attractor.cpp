#include "mifs/attractor.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>

#include "mifs/random.hpp"

namespace mifs {

namespace {

bool is_finite(const Point& p) { return std::isfinite(p.real()) && std::isfinite(p.imag()); }

struct Keyed {
  double kx;
  double ky;
  Point p;
};

bool keyed_less(const Keyed& u, const Keyed& v) {
  if (u.kx != v.kx) return u.kx < v.kx;
  if (u.ky != v.ky) return u.ky < v.ky;
  if (u.p.real() != v.p.real()) return u.p.real() < v.p.real();
  return u.p.imag() < v.p.imag();
}

/// Bucketed points for exact nearest-neighbour queries.
class GridIndex {
 public:
  explicit GridIndex(std::span<const Point> points) {
    double x_lo = std::numeric_limits<double>::infinity(), x_hi = -x_lo;
    double y_lo = x_lo, y_hi = -x_lo;
    for (const Point& p : points) {
      x_lo = std::min(x_lo, p.real());
      x_hi = std::max(x_hi, p.real());
      y_lo = std::min(y_lo, p.imag());
      y_hi = std::max(y_hi, p.imag());
    }
    const double w = x_hi - x_lo, h = y_hi - y_lo;
    const auto n = static_cast<double>(points.size());
    cell_ = std::max(std::sqrt(w * h / n), std::max(w, h) / n);
    if (!(cell_ > 0)) cell_ = 1;
    constexpr double kMaxSide = 4096;
    cell_ = std::max({cell_, w / kMaxSide, h / kMaxSide});
    x0_ = x_lo;
    y0_ = y_lo;
    nx_ = static_cast<long>(w / cell_) + 1;
    ny_ = static_cast<long>(h / cell_) + 1;

    std::vector<std::size_t> count(static_cast<std::size_t>(nx_ * ny_) + 1, 0);
    std::vector<std::size_t> cell_of(points.size());
    for (std::size_t i = 0; i < points.size(); ++i) {
      cell_of[i] = flat(cell_x(points[i].real()), cell_y(points[i].imag()));
      ++count[cell_of[i] + 1];
    }
    std::partial_sum(count.begin(), count.end(), count.begin());
    start_ = count;
    points_.resize(points.size());
    for (std::size_t i = 0; i < points.size(); ++i) points_[count[cell_of[i]]++] = points[i];
  }

  /// Squared distance from q to the nearest indexed point. Returns early
  /// with any candidate whose squared distance is <= good_enough.
  double nearest_squared(const Point& q, double good_enough) const {
    const long cx = cell_x_unclamped(q.real());
    const long cy = cell_y_unclamped(q.imag());
    const long to_grid = std::max({0L, -cx, cx - (nx_ - 1), -cy, cy - (ny_ - 1)});
    const long last_ring = std::max({cx, nx_ - 1 - cx, cy, ny_ - 1 - cy, to_grid});
    double best = std::numeric_limits<double>::infinity();

    for (long k = to_grid; k <= last_ring; ++k) {
      const long y_begin = std::max(cy - k, 0L), y_end = std::min(cy + k, ny_ - 1);
      for (long iy = y_begin; iy <= y_end; ++iy) {
        const bool edge_row = (iy == cy - k || iy == cy + k);
        const long step = edge_row ? 1 : 2 * k;
        for (long ix = cx - k; ix <= cx + k; ix += step) {
          if (ix < 0 || ix >= nx_) continue;
          const std::size_t cell = flat(ix, iy);
          for (std::size_t j = start_[cell]; j < start_[cell + 1]; ++j) {
            const double dx = points_[j].real() - q.real();
            const double dy = points_[j].imag() - q.imag();
            best = std::min(best, dx * dx + dy * dy);
          }
        }
      }
      if (best <= good_enough) return best;
      // Cells of ring k + 1 are at least k cell widths away.
      const double reach = static_cast<double>(k) * cell_;
      if (best <= reach * reach) return best;
    }
    return best;
  }

 private:
  long cell_x_unclamped(double x) const { return static_cast<long>(std::floor((x - x0_) / cell_)); }
  long cell_y_unclamped(double y) const { return static_cast<long>(std::floor((y - y0_) / cell_)); }
  long cell_x(double x) const { return std::clamp(cell_x_unclamped(x), 0L, nx_ - 1); }
  long cell_y(double y) const { return std::clamp(cell_y_unclamped(y), 0L, ny_ - 1); }
  std::size_t flat(long ix, long iy) const { return static_cast<std::size_t>(iy * nx_ + ix); }

  double cell_ = 1, x0_ = 0, y0_ = 0;
  long nx_ = 1, ny_ = 1;
  std::vector<std::size_t> start_;
  std::vector<Point> points_;
};

std::vector<Point> map_all(const Mifs<double>& sys, std::span<const Point> y) {
  std::vector<Point> out;
  out.reserve(sys.size() * y.size());
  for (const auto& cert : sys.maps()) {
    for (const Point& z : y) {
      const Point w = apply_finite(cert.transform, z);
      if (!is_finite(w)) throw InvalidArgument("cloud point lies on the pole of a system map");
      out.push_back(w);
    }
  }
  return out;
}

}  // namespace

PointCloud::PointCloud(std::vector<Point> points) : points_(std::move(points)) {
  if (points_.empty()) throw InvalidArgument("point cloud must be non-empty");
  for (const Point& p : points_)
    if (!is_finite(p)) throw InvalidArgument("point cloud contains a non-finite point");
}

std::vector<Point> grid_unique(std::vector<Point> points, double resolution) {
  if (!(resolution > 0)) throw InvalidArgument("grid resolution must be positive");
  std::vector<Keyed> keyed;
  keyed.reserve(points.size());
  for (const Point& p : points)
    keyed.push_back({std::floor(p.real() / resolution), std::floor(p.imag() / resolution), p});
  std::sort(keyed.begin(), keyed.end(), keyed_less);
  points.clear();
  for (std::size_t i = 0; i < keyed.size(); ++i) {
    if (i > 0 && keyed[i].kx == keyed[i - 1].kx && keyed[i].ky == keyed[i - 1].ky) continue;
    points.push_back(keyed[i].p);
  }
  return points;
}

PointCloud canonicalize(std::vector<Point> points) {
  return PointCloud(grid_unique(std::move(points), kDedupeResolution));
}

double directed_hausdorff(std::span<const Point> a, std::span<const Point> b) {
  if (a.empty() || b.empty()) throw InvalidArgument("Hausdorff distance needs non-empty sets");
  const GridIndex index(b);
  double worst = 0;
  for (const Point& p : a) worst = std::max(worst, index.nearest_squared(p, worst));
  return std::sqrt(worst);
}

double hausdorff_distance(const PointCloud& a, const PointCloud& b) {
  return std::max(directed_hausdorff(a.points(), b.points()), directed_hausdorff(b.points(), a.points()));
}

PointCloud hutchinson_step(const Mifs<double>& sys, const PointCloud& y) {
  return canonicalize(map_all(sys, y.points()));
}

AttractorResult iterate_attractor(const Mifs<double>& sys, const PointCloud& y0, int max_iter, double tol,
                                  const IterationOptions& options) {
  if (max_iter < 1) throw InvalidArgument("max_iter must be at least 1");
  if (!(tol > 0)) throw InvalidArgument("tol must be positive");
  if (options.max_points < 1) throw InvalidArgument("point budget must be at least 1");
  const double cell = options.thinning_cell > 0 ? options.thinning_cell : tol / 2;
  SplitMix64 rng(options.seed);

  AttractorResult result{canonicalize(y0.points()), 0, {}, 0};
  for (int k = 0; k < max_iter; ++k) {
    std::vector<Point> next = map_all(sys, result.cloud.points());
    if (cell > kDedupeResolution) next = grid_unique(std::move(next), cell);
    if (next.size() > options.max_points) {
      // Partial Fisher-Yates: the first max_points slots become a uniform sample.
      for (std::size_t i = 0; i < options.max_points; ++i)
        std::swap(next[i], next[i + rng.below(next.size() - i)]);
      next.resize(options.max_points);
    }
    PointCloud cloud = canonicalize(std::move(next));
    const double step = hausdorff_distance(result.cloud, cloud);
    result.cloud = std::move(cloud);
    result.step_distances.push_back(step);
    result.iterations_used = k + 1;
    if (step < tol) break;
  }
  result.error_bound = result.step_distances.back() / (1 - sys.max_lipschitz());
  return result;
}

PointCloud chaos_game(const Mifs<double>& sys, std::size_t n_points, std::size_t burn_in, std::uint64_t seed,
                      std::span<const double> weights) {
  if (n_points < 1) throw InvalidArgument("chaos game needs at least one point");
  std::vector<double> cumulative;
  if (!weights.empty()) {
    if (weights.size() != sys.size()) throw InvalidArgument("one weight per map is required");
    double total = 0;
    for (double w : weights) {
      if (!(w >= 0) || !std::isfinite(w)) throw InvalidArgument("weights must be finite and non-negative");
      total += w;
      cumulative.push_back(total);
    }
    if (!(total > 0)) throw InvalidArgument("weights must not all vanish");
    for (double& c : cumulative) c /= total;
  }

  SplitMix64 rng(seed);
  const auto pick = [&]() -> std::size_t {
    if (cumulative.empty()) return rng.below(sys.size());
    const double u = rng.uniform();
    const auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
    return std::min(static_cast<std::size_t>(it - cumulative.begin()), sys.size() - 1);
  };

  Point z = 0;
  for (std::size_t i = 0; i < burn_in; ++i) z = apply_finite(sys.maps()[pick()].transform, z);
  std::vector<Point> orbit;
  orbit.reserve(n_points);
  for (std::size_t i = 0; i < n_points; ++i) {
    z = apply_finite(sys.maps()[pick()].transform, z);
    orbit.push_back(z);
  }
  return PointCloud(std::move(orbit));
}

PointCloud unit_circle_points(std::size_t n) {
  std::vector<Point> pts;
  pts.reserve(n);
  for (std::size_t k = 0; k < n; ++k)
    pts.push_back(std::polar(1.0, 2 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n)));
  return PointCloud(std::move(pts));
}

}  // namespace mifs
