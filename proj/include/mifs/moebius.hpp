#pragma once

#include <cmath>
#include <complex>
#include <limits>

#include <Eigen/Core>

#include "mifs/errors.hpp"
#include "mifs/extended_complex.hpp"

namespace mifs {

/// z -> (az + b) / (cz + d), stored as the coefficient matrix [a b; c d]
/// with determinant ad - bc = 1. The quadruple is only defined up to a
/// global sign; every derived quantity in the library respects that.
///
/// Instances are built through normalize(), compose() or inverse(), so the
/// determinant invariant holds for every value of this type.
template <typename Scalar = double>
class MoebiusTransform {
 public:
  using Complex = std::complex<Scalar>;
  using Matrix = Eigen::Matrix<Complex, 2, 2>;

  static MoebiusTransform identity() { return MoebiusTransform(Matrix::Identity()); }

  /// Keeps the coefficients as given; they must already satisfy
  /// |ad - bc - 1| <= 1e-9.
  static MoebiusTransform from_normalized(const Complex& a, const Complex& b, const Complex& c, const Complex& d) {
    if (!(std::abs(a * d - b * c - Complex(1)) <= Scalar(1e-9)))
      throw InvalidArgument("coefficients are not normalized: |ad - bc - 1| > 1e-9");
    Matrix m;
    m << a, b, c, d;
    return MoebiusTransform(m);
  }

  const Complex& a() const { return m_(0, 0); }
  const Complex& b() const { return m_(0, 1); }
  const Complex& c() const { return m_(1, 0); }
  const Complex& d() const { return m_(1, 1); }
  const Matrix& matrix() const { return m_; }

  Complex determinant() const { return a() * d() - b() * c(); }

  MoebiusTransform operator-() const { return MoebiusTransform(-m_); }

  template <typename S>
  friend MoebiusTransform<S> normalize(const std::complex<S>&, const std::complex<S>&,
                                       const std::complex<S>&, const std::complex<S>&);
  template <typename S>
  friend MoebiusTransform<S> inverse(const MoebiusTransform<S>&);

 private:
  explicit MoebiusTransform(const Matrix& m) : m_(m) {}

  Matrix m_;
};

using Moebius = MoebiusTransform<double>;

namespace detail {
template <typename Scalar>
constexpr Scalar kDegenerateDeterminant = Scalar(1e-12);
template <typename Scalar>
constexpr Scalar kPoleModulus = Scalar(1e-300);
}  // namespace detail

/// Scales (a, b, c, d) by the principal square root of ad - bc.
template <typename Scalar>
MoebiusTransform<Scalar> normalize(const std::complex<Scalar>& a, const std::complex<Scalar>& b,
                                   const std::complex<Scalar>& c, const std::complex<Scalar>& d) {
  const std::complex<Scalar> det = a * d - b * c;
  if (!(std::abs(det) > detail::kDegenerateDeterminant<Scalar>)) throw DegenerateMap();
  const std::complex<Scalar> scale = std::sqrt(det);
  typename MoebiusTransform<Scalar>::Matrix m;
  m << a / scale, b / scale, c / scale, d / scale;
  return MoebiusTransform<Scalar>(m);
}

template <typename Scalar>
MoebiusTransform<Scalar> normalize(const typename MoebiusTransform<Scalar>::Matrix& m) {
  return normalize<Scalar>(m(0, 0), m(0, 1), m(1, 0), m(1, 1));
}

/// Evaluates the map on the extended plane. The pole -d/c goes to infinity
/// and infinity goes to a/c (or stays put when c = 0). A finite argument is
/// treated as the pole when cz + d vanishes to within the rounding error of
/// its own evaluation.
template <typename Scalar>
ExtendedComplex<Scalar> apply(const MoebiusTransform<Scalar>& t, const ExtendedComplex<Scalar>& z) {
  using Complex = std::complex<Scalar>;
  if (z.is_infinity()) {
    if (t.c() == Complex(0)) return ExtendedComplex<Scalar>::infinity();
    return ExtendedComplex<Scalar>(t.a() / t.c());
  }
  const Complex& w = z.value();
  const Complex den = t.c() * w + t.d();
  const Scalar slack =
      8 * std::numeric_limits<Scalar>::epsilon() * (std::abs(t.c() * w) + std::abs(t.d()));
  if (std::abs(den) <= slack) return ExtendedComplex<Scalar>::infinity();
  const Complex image = (t.a() * w + t.b()) / den;
  if (!std::isfinite(image.real()) || !std::isfinite(image.imag()))
    return ExtendedComplex<Scalar>::infinity();
  return ExtendedComplex<Scalar>(image);
}

/// Finite fast path; the caller guarantees z is away from the pole.
template <typename Scalar>
std::complex<Scalar> apply_finite(const MoebiusTransform<Scalar>& t, const std::complex<Scalar>& z) {
  return (t.a() * z + t.b()) / (t.c() * z + t.d());
}

/// t after u, i.e. z -> t(u(z)).
template <typename Scalar>
MoebiusTransform<Scalar> compose(const MoebiusTransform<Scalar>& t, const MoebiusTransform<Scalar>& u) {
  const typename MoebiusTransform<Scalar>::Matrix product = t.matrix() * u.matrix();
  return normalize<Scalar>(product);
}

template <typename Scalar>
MoebiusTransform<Scalar> inverse(const MoebiusTransform<Scalar>& t) {
  typename MoebiusTransform<Scalar>::Matrix m;
  m << t.d(), -t.b(), -t.c(), t.a();
  return MoebiusTransform<Scalar>(m);
}

/// |t'(z)| = 1 / |cz + d|^2.
template <typename Scalar>
Scalar derivative_modulus(const MoebiusTransform<Scalar>& t, const std::complex<Scalar>& z) {
  const Scalar den = std::abs(t.c() * z + t.d());
  if (!(den > detail::kPoleModulus<Scalar>)) throw PoleEvaluation();
  return Scalar(1) / (den * den);
}

/// Coefficient-wise comparison modulo the global sign ambiguity.
template <typename Scalar>
bool equal_up_to_sign(const MoebiusTransform<Scalar>& t, const MoebiusTransform<Scalar>& u, Scalar tol) {
  const auto plus = (t.matrix() - u.matrix()).cwiseAbs().maxCoeff();
  const auto minus = (t.matrix() + u.matrix()).cwiseAbs().maxCoeff();
  return std::min(plus, minus) <= tol;
}

}  // namespace mifs
