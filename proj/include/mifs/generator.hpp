#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <vector>

#include "mifs/circle.hpp"
#include "mifs/contraction.hpp"
#include "mifs/errors.hpp"
#include "mifs/moebius.hpp"

namespace mifs {

/// Natural parameters of a disc contraction: the image disc (center m,
/// radius r) plus the free coefficient c and the argument of d. The modulus
/// of d is fixed by |d|^2 = |c|^2 + 1/r.
template <typename Scalar = double>
struct DiscImageSpec {
  Scalar r;
  std::complex<Scalar> m;
  std::complex<Scalar> c;
  Scalar d_phase;
};

/// The disc t(D): center m, radius r.
template <typename Scalar = double>
struct DiscImage {
  Scalar r;
  std::complex<Scalar> m;
};

namespace detail {
// |m| <= 1 - r is checked with this absolute slack so that centers placed
// exactly on the tangency circle survive rounding of |m|.
template <typename Scalar>
constexpr Scalar kTangencySlack = Scalar(1e-12);
}  // namespace detail

template <typename Scalar>
void validate(const DiscImageSpec<Scalar>& spec) {
  if (!(spec.r > 0 && spec.r < 1))
    throw InvalidSpec(SpecField::Radius, "r must satisfy 0 < r < 1");
  if (!std::isfinite(spec.m.real()) || !std::isfinite(spec.m.imag()) ||
      !(std::abs(spec.m) <= 1 - spec.r + detail::kTangencySlack<Scalar>))
    throw InvalidSpec(SpecField::Center, "m must satisfy |m| <= 1 - r");
  if (!std::isfinite(spec.c.real()) || !std::isfinite(spec.c.imag()) ||
      !(std::abs(spec.c) < (1 - spec.r) / (2 * spec.r)))
    throw InvalidSpec(SpecField::FreeCoefficient, "c must satisfy |c| < (1 - r) / (2r)");
  if (!std::isfinite(spec.d_phase))
    throw InvalidSpec(SpecField::Phase, "d_phase must be finite");
}

/// Builds the contraction with image disc (m, r):
///   d = sqrt(|c|^2 + 1/r) e^{i d_phase},  a = m c + r conj(d),  b = m d + r conj(c).
/// Then ad - bc = r (|d|^2 - |c|^2) = 1.
template <typename Scalar>
ContractionCertificate<Scalar> make_contraction(const DiscImageSpec<Scalar>& spec) {
  validate(spec);
  const Scalar d_modulus = std::sqrt(std::norm(spec.c) + 1 / spec.r);
  const std::complex<Scalar> d = std::polar(d_modulus, spec.d_phase);
  const std::complex<Scalar> a = spec.m * spec.c + spec.r * std::conj(d);
  const std::complex<Scalar> b = spec.m * d + spec.r * std::conj(spec.c);
  const auto t = MoebiusTransform<Scalar>::from_normalized(a, b, spec.c, d);
  // Condition ii holds algebraically, with slack (1 - r - |m|) / r >= 0. It is
  // not re-tested in floating point, where a tangent image disc (|m| = 1 - r)
  // can miss it by an ulp. Condition i is re-tested.
  const Scalar gap = std::abs(d) - std::abs(spec.c);
  if (!(gap > 1)) throw NotContractive(ContractionFailure::ConditionI);
  return ContractionCertificate<Scalar>{t, Scalar(1) / (gap * gap), gap, image_of_unit_disc(t)};
}

/// r = 1 / (|d|^2 - |c|^2) and m = r (b conj(d) - a conj(c)).
template <typename Scalar>
DiscImage<Scalar> recover_disc_image(const MoebiusTransform<Scalar>& t) {
  if (const auto failure = contraction_failure(t)) throw NotContractive(*failure);
  const Scalar r = 1 / (std::norm(t.d()) - std::norm(t.c()));
  return {r, r * (t.b() * std::conj(t.d()) - t.a() * std::conj(t.c()))};
}

/// Full parameter recovery; make_contraction(recover_spec(t)) equals t up
/// to sign.
template <typename Scalar>
DiscImageSpec<Scalar> recover_spec(const MoebiusTransform<Scalar>& t) {
  const DiscImage<Scalar> image = recover_disc_image(t);
  Scalar phase = std::arg(t.d());
  if (phase < 0) phase += 2 * std::numbers::pi_v<Scalar>;
  return {image.r, image.m, t.c(), phase};
}

/// A finite list of certified disc contractions.
template <typename Scalar = double>
class Mifs {
 public:
  explicit Mifs(std::vector<ContractionCertificate<Scalar>> maps) : maps_(std::move(maps)) {
    if (maps_.empty()) throw InvalidArgument("an iterated function system needs at least one map");
    max_lipschitz_ = 0;
    for (const auto& m : maps_) max_lipschitz_ = std::max(max_lipschitz_, m.lipschitz);
  }

  /// Certifies every transform; throws NotContractive on the first failure.
  static Mifs from_transforms(const std::vector<MoebiusTransform<Scalar>>& transforms) {
    std::vector<ContractionCertificate<Scalar>> certs;
    certs.reserve(transforms.size());
    for (const auto& t : transforms) certs.push_back(certify_contraction(t));
    return Mifs(std::move(certs));
  }

  const std::vector<ContractionCertificate<Scalar>>& maps() const { return maps_; }
  std::size_t size() const { return maps_.size(); }
  Scalar max_lipschitz() const { return max_lipschitz_; }

 private:
  std::vector<ContractionCertificate<Scalar>> maps_;
  Scalar max_lipschitz_;
};

/// Random certified system. Per map the generator draws, in order:
///   r       uniform in [r_min, r_max]
///   |m|     (1 - r) sqrt(u)          (area-uniform on the disc |m| <= 1 - r)
///   arg m   uniform in [0, 2pi)
///   |c|     uniform in [0, min(0.95 (1 - r) / (2r), 5)]
///   arg c   uniform in [0, 2pi)
///   d_phase uniform in [0, 2pi)
/// with every uniform taken from SplitMix64(seed).
Mifs<double> sample_random_mifs(int n, std::uint64_t seed, double r_min, double r_max);

/// The specs drawn by sample_random_mifs, in the same order.
std::vector<DiscImageSpec<double>> sample_random_specs(int n, std::uint64_t seed, double r_min,
                                                      double r_max);

}  // namespace mifs
