#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <variant>

#include "mifs/errors.hpp"
#include "mifs/moebius.hpp"

namespace mifs {

template <typename Scalar = double>
struct Circle {
  using Complex = std::complex<Scalar>;

  Circle(Complex center_, Scalar radius_) : center(center_), radius(radius_) {
    if (!(radius > 0) || !std::isfinite(radius) || !std::isfinite(center.real()) ||
        !std::isfinite(center.imag()))
      throw InvalidArgument("circle needs a finite center and a finite positive radius");
  }

  Complex center;
  Scalar radius;
};

template <typename Scalar = double>
Circle<Scalar> unit_circle() {
  return Circle<Scalar>({0, 0}, 1);
}

/// A line given by two distinct points on it.
template <typename Scalar = double>
struct Line {
  std::complex<Scalar> p;
  std::complex<Scalar> q;
};

template <typename Scalar = double>
using GeneralizedCircle = std::variant<Circle<Scalar>, Line<Scalar>>;

namespace detail {
template <typename Scalar>
constexpr Scalar kLineDenominator = Scalar(1e-10);
}

/// Image of a circle under a Moebius map. Closed forms:
///   M' = ((aM + b) conj(cM + d) - R^2 a conj(c)) / (|cM + d|^2 - R^2 |c|^2)
///   R' = R / ||cM + d|^2 - R^2 |c|^2|
/// When that denominator is below 1e-10 in magnitude the circle passes
/// (numerically) through the pole and the image is returned as a line.
template <typename Scalar>
GeneralizedCircle<Scalar> image_of_circle(const MoebiusTransform<Scalar>& t, const Circle<Scalar>& s) {
  using Complex = std::complex<Scalar>;
  const Complex& M = s.center;
  const Scalar R2 = s.radius * s.radius;
  const Complex cm_d = t.c() * M + t.d();
  const Scalar den = std::norm(cm_d) - R2 * std::norm(t.c());

  if (std::abs(den) > detail::kLineDenominator<Scalar>) {
    const Complex center = ((t.a() * M + t.b()) * std::conj(cm_d) - R2 * t.a() * std::conj(t.c())) / den;
    return Circle<Scalar>(center, s.radius / std::abs(den));
  }

  // Sample the circle a quarter turn either side of the pole's preimage.
  const Complex pole = -t.d() / t.c();
  const Scalar theta = std::arg(pole - M);
  const Scalar quarter = std::numbers::pi_v<Scalar> / 2;
  const Complex p = M + std::polar(s.radius, theta + quarter);
  const Complex q = M + std::polar(s.radius, theta - quarter);
  return Line<Scalar>{apply_finite(t, p), apply_finite(t, q)};
}

/// Boundary circle of t(D) for the closed unit disc D:
/// center (b conj(d) - a conj(c)) / (|d|^2 - |c|^2), radius 1 / ||d|^2 - |c|^2|.
template <typename Scalar>
Circle<Scalar> image_of_unit_disc(const MoebiusTransform<Scalar>& t) {
  const Scalar den = std::norm(t.d()) - std::norm(t.c());
  if (!(std::abs(den) > detail::kLineDenominator<Scalar>)) throw DegenerateImage();
  return Circle<Scalar>((t.b() * std::conj(t.d()) - t.a() * std::conj(t.c())) / den,
                        Scalar(1) / std::abs(den));
}

}  // namespace mifs
