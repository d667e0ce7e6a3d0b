#pragma once

#include <cmath>
#include <complex>

#include "mifs/errors.hpp"

namespace mifs {

/// A point of the Riemann sphere: either a finite complex number or the
/// point at infinity. Infinity is an explicit state, never an overflowed
/// component.
template <typename Scalar = double>
class ExtendedComplex {
 public:
  using Complex = std::complex<Scalar>;

  ExtendedComplex(Complex z) : value_(z), infinite_(false) {  // NOLINT: implicit by intent
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
      throw InvalidArgument("finite point with non-finite component");
  }
  ExtendedComplex(Scalar re, Scalar im = Scalar(0)) : ExtendedComplex(Complex(re, im)) {}

  static ExtendedComplex infinity() { return ExtendedComplex(); }

  bool is_infinity() const noexcept { return infinite_; }
  bool is_finite() const noexcept { return !infinite_; }

  const Complex& value() const {
    if (infinite_) throw InvalidArgument("the point at infinity has no finite value");
    return value_;
  }

  friend bool operator==(const ExtendedComplex& x, const ExtendedComplex& y) {
    if (x.infinite_ || y.infinite_) return x.infinite_ == y.infinite_;
    return x.value_ == y.value_;
  }

 private:
  ExtendedComplex() : value_(0), infinite_(true) {}

  Complex value_;
  bool infinite_;
};

}  // namespace mifs
