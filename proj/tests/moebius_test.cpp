#include <doctest.h>

#include <complex>
#include <random>

#include "mifs/moebius.hpp"
#include "oracles.hpp"
#include "worked_examples.hpp"

using mifs::ExtendedComplex;
using mifs::Moebius;
using C = std::complex<double>;

namespace {

Moebius random_transform(std::mt19937_64& rng) {
  for (;;) {
    try {
      return mifs::normalize(oracle::gaussian_complex(rng), oracle::gaussian_complex(rng),
                             oracle::gaussian_complex(rng), oracle::gaussian_complex(rng));
    } catch (const mifs::DegenerateMap&) {
    }
  }
}

double det_error(const Moebius& t) { return std::abs(t.determinant() - C(1)); }

const C i{0, 1};

}  // namespace

TEST_CASE("normalize divides by the principal root of the determinant") {
  const Moebius t = mifs::normalize(C(2), C(0), C(0), C(2));
  CHECK(t.a() == C(1));
  CHECK(t.b() == C(0));
  CHECK(t.c() == C(0));
  CHECK(t.d() == C(1));

  const Moebius quarter = mifs::normalize(C(0.5), C(0), C(0), C(2));
  CHECK(quarter.a() == C(0.5));
  CHECK(quarter.d() == C(2));

  const Moebius rotated = mifs::normalize(2.0 * i, C(0), C(0), C(1));
  CHECK(det_error(rotated) <= 1e-12);
}

TEST_CASE("normalize rejects constant maps") {
  CHECK_THROWS_AS(mifs::normalize(C(1), C(2), C(2), C(4)), mifs::DegenerateMap);
  CHECK_THROWS_AS(mifs::normalize(C(0), C(0), C(0), C(0)), mifs::DegenerateMap);
  CHECK_THROWS_AS(mifs::normalize(C(1e-7), C(0), C(0), C(1e-7)), mifs::DegenerateMap);
}

TEST_CASE("from_normalized refuses non-unimodular input") {
  CHECK_NOTHROW(Moebius::from_normalized(C(0.5), C(0), C(0), C(2)));
  CHECK_THROWS_AS(Moebius::from_normalized(C(1), C(0), C(0), C(2)), mifs::InvalidArgument);
}

TEST_CASE("apply on the extended plane") {
  const Moebius id = Moebius::identity();
  const auto w = mifs::apply(id, ExtendedComplex<>(C(0.3, 0.4)));
  REQUIRE(w.is_finite());
  CHECK(w.value() == C(0.3, 0.4));
  CHECK(mifs::apply(id, ExtendedComplex<>::infinity()).is_infinity());

  const Moebius reciprocal = mifs::normalize(C(0), i, i, C(0));
  const auto half = mifs::apply(reciprocal, ExtendedComplex<>(2.0));
  REQUIRE(half.is_finite());
  CHECK(std::abs(half.value() - C(0.5)) < 1e-15);
  CHECK(mifs::apply(reciprocal, ExtendedComplex<>(0.0)).is_infinity());
  const auto origin = mifs::apply(reciprocal, ExtendedComplex<>::infinity());
  REQUIRE(origin.is_finite());
  CHECK(origin.value() == C(0));
}

TEST_CASE("apply sends the computed pole to infinity and infinity to a/c") {
  std::mt19937_64 rng(7);
  for (int k = 0; k < 200; ++k) {
    const Moebius t = random_transform(rng);
    const C pole = -t.d() / t.c();
    CHECK(mifs::apply(t, ExtendedComplex<>(pole)).is_infinity());
    const auto at_infinity = mifs::apply(t, ExtendedComplex<>::infinity());
    REQUIRE(at_infinity.is_finite());
    CHECK(std::abs(at_infinity.value() - t.a() / t.c()) <= 1e-12 * std::abs(t.a() / t.c()));
    // A point a little off the pole is finite.
    CHECK(mifs::apply(t, ExtendedComplex<>(pole + 1e-6)).is_finite());
  }
}

TEST_CASE("ExtendedComplex rejects non-finite components") {
  CHECK_THROWS_AS(ExtendedComplex<>(C(std::nan(""), 0)), mifs::InvalidArgument);
  CHECK_THROWS_AS(ExtendedComplex<>(C(0, HUGE_VAL)), mifs::InvalidArgument);
  CHECK_THROWS_AS(ExtendedComplex<>::infinity().value(), mifs::InvalidArgument);
}

TEST_CASE("inverse swaps and negates") {
  CHECK(mifs::equal_up_to_sign(mifs::inverse(Moebius::identity()), Moebius::identity(), 0.0));
  const Moebius quarter = mifs::normalize(C(0.5), C(0), C(0), C(2));
  const Moebius four = mifs::inverse(quarter);
  CHECK(four.a() == C(2));
  CHECK(four.d() == C(0.5));
  const auto w = mifs::apply(four, ExtendedComplex<>(C(0.25, -1)));
  CHECK(std::abs(w.value() - C(1, -4)) < 1e-15);

  const auto ex1 = worked::system(0).maps()[0].transform;
  CHECK(mifs::equal_up_to_sign(mifs::compose(mifs::inverse(ex1), ex1), Moebius::identity(), 1e-9));
  CHECK(mifs::equal_up_to_sign(mifs::compose(ex1, mifs::inverse(ex1)), Moebius::identity(), 1e-9));
}

TEST_CASE("compose matches sequential application") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-2, 2);
  for (int trial = 0; trial < 50; ++trial) {
    const Moebius t = random_transform(rng), v = random_transform(rng);
    const Moebius tv = mifs::compose(t, v);
    CHECK(det_error(tv) <= 1e-9);
    CHECK(mifs::equal_up_to_sign(mifs::compose(Moebius::identity(), t), t, 1e-12));
    int tested = 0;
    while (tested < 100) {
      const C z(u(rng), u(rng));
      const C vz_den = v.c() * z + v.d();
      if (std::abs(vz_den) < 0.01) continue;
      const C vz = (v.a() * z + v.b()) / vz_den;
      const C t_den = t.c() * vz + t.d();
      if (std::abs(t_den) < 0.01 || std::abs(tv.c() * z + tv.d()) < 0.01) continue;
      const C expected = (t.a() * vz + t.b()) / t_den;
      const C got = mifs::apply(tv, ExtendedComplex<>(z)).value();
      CHECK(std::abs(got - expected) <= 1e-9 * std::max(1.0, std::abs(expected)));
      ++tested;
    }
  }
}

TEST_CASE("group laws and determinant preservation") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 200; ++trial) {
    const Moebius t = random_transform(rng), u = random_transform(rng), v = random_transform(rng);
    CHECK(det_error(t) <= 1e-9);
    CHECK(det_error(mifs::inverse(t)) <= 1e-9);
    const Moebius left = mifs::compose(mifs::compose(t, u), v);
    const Moebius right = mifs::compose(t, mifs::compose(u, v));
    const double scale = std::max(1.0, left.matrix().cwiseAbs().maxCoeff());
    CHECK(mifs::equal_up_to_sign(left, right, 1e-9 * scale));
    const Moebius twice = mifs::inverse(mifs::inverse(t));
    CHECK(twice.matrix() == t.matrix());
  }
}

TEST_CASE("derivative modulus") {
  CHECK(mifs::derivative_modulus(Moebius::identity(), C(0.3, -0.7)) == 1.0);
  CHECK(mifs::derivative_modulus(mifs::normalize(C(0.5), C(0), C(0), C(2)), C(0)) == 0.25);
  const Moebius reciprocal = mifs::normalize(C(0), i, i, C(0));
  CHECK_THROWS_AS(mifs::derivative_modulus(reciprocal, C(0)), mifs::PoleEvaluation);

  // Central differences along both axes.
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> u(-1, 1);
  int tested = 0;
  while (tested < 300) {
    const Moebius t = random_transform(rng);
    const C z(u(rng), u(rng));
    if (std::abs(t.c() * z + t.d()) < 0.2) continue;
    const double h = 1e-6;
    const auto f = [&](C w) { return mifs::apply_finite(t, w); };
    const double dx = std::abs((f(z + h) - f(z - h)) / (2 * h));
    const double dy = std::abs((f(z + C(0, h)) - f(z - C(0, h))) / (2 * h));
    const double expected = mifs::derivative_modulus(t, z);
    CHECK(std::abs(dx - expected) <= 1e-6 * expected);
    CHECK(std::abs(dy - expected) <= 1e-6 * expected);
    ++tested;
  }
}

TEST_CASE("every operation is blind to the global sign") {
  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 100; ++trial) {
    const Moebius t = random_transform(rng), u = random_transform(rng);
    const Moebius neg = -t;
    const C z = oracle::gaussian_complex(rng);
    CHECK(std::abs(mifs::apply_finite(t, z) - mifs::apply_finite(neg, z)) <= 1e-12 * std::abs(mifs::apply_finite(t, z)));
    CHECK(mifs::derivative_modulus(t, z) == mifs::derivative_modulus(neg, z));
    CHECK(mifs::equal_up_to_sign(mifs::compose(t, u), mifs::compose(neg, u), 1e-12));
    CHECK(mifs::equal_up_to_sign(mifs::inverse(t), mifs::inverse(neg), 0.0));
  }
}

TEST_CASE("the algebra is generic in the scalar type") {
  using L = std::complex<long double>;
  const auto t = mifs::normalize(L(2), L(0), L(0), L(8));
  CHECK(std::abs(t.determinant() - L(1)) < 1e-15L);
  const auto w = mifs::apply(t, mifs::ExtendedComplex<long double>(L(1)));
  CHECK(std::abs(w.value() - L(0.25)) < 1e-15L);
}
