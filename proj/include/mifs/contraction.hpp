#pragma once

#include <cmath>
#include <complex>
#include <limits>
#include <optional>
#include <variant>

#include "mifs/circle.hpp"
#include "mifs/errors.hpp"
#include "mifs/moebius.hpp"

namespace mifs {

/// Proof that a map sends the closed unit disc into itself with Lipschitz
/// constant `lipschitz` = 1 / (|d| - |c|)^2 < 1.
template <typename Scalar = double>
struct ContractionCertificate {
  MoebiusTransform<Scalar> transform;
  Scalar lipschitz;
  Scalar min_denominator;  // min over the disc of |cz + d|, equal to |d| - |c|
  Circle<Scalar> image;    // boundary of transform(D)
};

/// |a conj(c) - b conj(d)| + 1 <= |d|^2 - |c|^2, up to rounding so that
/// internally tangent images (equality) are accepted.
template <typename Scalar>
bool satisfies_condition_ii(const MoebiusTransform<Scalar>& t) {
  const Scalar lhs = std::abs(t.a() * std::conj(t.c()) - t.b() * std::conj(t.d())) + 1;
  const Scalar rhs = std::norm(t.d()) - std::norm(t.c());
  const Scalar slack = 16 * std::numeric_limits<Scalar>::epsilon() * (std::norm(t.d()) + std::norm(t.c()));
  return lhs <= rhs + slack;
}

/// True iff t(D) is contained in D.
template <typename Scalar>
bool check_maps_into_disc(const MoebiusTransform<Scalar>& t) {
  return std::abs(t.c()) < std::abs(t.d()) && satisfies_condition_ii(t);
}

/// Which contractivity condition fails, or nothing when t contracts D into D.
template <typename Scalar>
std::optional<ContractionFailure> contraction_failure(const MoebiusTransform<Scalar>& t) {
  if (!(std::abs(t.d()) - std::abs(t.c()) > 1)) return ContractionFailure::ConditionI;
  if (!satisfies_condition_ii(t)) return ContractionFailure::ConditionII;
  return std::nullopt;
}

template <typename Scalar>
ContractionCertificate<Scalar> certify_contraction(const MoebiusTransform<Scalar>& t) {
  if (const auto failure = contraction_failure(t)) throw NotContractive(*failure);
  const Scalar gap = std::abs(t.d()) - std::abs(t.c());
  return ContractionCertificate<Scalar>{t, Scalar(1) / (gap * gap), gap, image_of_unit_disc(t)};
}

/// The point of the unit circle where |cz + d| is smallest, -|c| d / (c |d|).
/// Undefined for c = 0, where |t'| is constant on the disc.
template <typename Scalar>
std::optional<std::complex<Scalar>> steepest_point(const MoebiusTransform<Scalar>& t) {
  if (t.c() == std::complex<Scalar>(0)) return std::nullopt;
  return -std::abs(t.c()) * t.d() / (t.c() * std::abs(t.d()));
}

}  // namespace mifs
