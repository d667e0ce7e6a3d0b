#include <doctest.h>

#include <complex>
#include <numbers>
#include <random>
#include <variant>

#include "mifs/circle.hpp"
#include "oracles.hpp"
#include "worked_examples.hpp"

using mifs::Circle;
using mifs::Moebius;
using C = std::complex<double>;

namespace {

Moebius random_transform(std::mt19937_64& rng) {
  return mifs::normalize(oracle::gaussian_complex(rng), oracle::gaussian_complex(rng), oracle::gaussian_complex(rng),
                         oracle::gaussian_complex(rng));
}

Circle<double> random_circle(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> radius(0.1, 2.0), coord(-2, 2);
  return Circle<double>({coord(rng), coord(rng)}, radius(rng));
}

double denominator(const Moebius& t, const Circle<double>& s) {
  return std::norm(t.c() * s.center + t.d()) - s.radius * s.radius * std::norm(t.c());
}

// Largest |(|w - M'| - R')| over `samples` images of boundary points of s.
double fit_error(const Moebius& t, const Circle<double>& s, const Circle<double>& image, int samples) {
  double worst = 0;
  for (int k = 0; k < samples; ++k) {
    const C z = s.center + std::polar(s.radius, 2 * std::numbers::pi * k / samples);
    const C w = (t.a() * z + t.b()) / (t.c() * z + t.d());
    worst = std::max(worst, std::abs(std::abs(w - image.center) - image.radius));
  }
  return worst;
}

}  // namespace

TEST_CASE("circle validation") {
  CHECK_THROWS_AS(Circle<double>(C(0), 0.0), mifs::InvalidArgument);
  CHECK_THROWS_AS(Circle<double>(C(0), -1.0), mifs::InvalidArgument);
  CHECK_THROWS_AS(Circle<double>(C(0), HUGE_VAL), mifs::InvalidArgument);
}

TEST_CASE("identity fixes every circle") {
  const auto image = mifs::image_of_circle(Moebius::identity(), Circle<double>({0.3, 0.1}, 0.5));
  REQUIRE(std::holds_alternative<Circle<double>>(image));
  const auto& circle = std::get<Circle<double>>(image);
  CHECK(circle.center == C(0.3, 0.1));
  CHECK(circle.radius == 0.5);
}

TEST_CASE("image of the unit circle under the first map of example 1") {
  const Moebius phi1 = worked::system(0).maps()[0].transform;
  const auto image = mifs::image_of_circle(phi1, mifs::unit_circle<double>());
  REQUIRE(std::holds_alternative<Circle<double>>(image));
  const auto& circle = std::get<Circle<double>>(image);
  CHECK(std::abs(circle.center - C(-0.2, 0.2)) < 1e-3);
  CHECK(std::abs(circle.radius - 0.7) < 1e-3);
}

TEST_CASE("a circle through the pole becomes a line") {
  const C i{0, 1};
  const Moebius reciprocal = mifs::normalize(C(0), i, i, C(0));
  const Circle<double> s({1, 0}, 1);
  // |cM + d| = R|c|: the line criterion holds with equality.
  CHECK(std::abs(std::abs(reciprocal.c() * s.center + reciprocal.d()) - s.radius * std::abs(reciprocal.c())) < 1e-15);
  const auto image = mifs::image_of_circle(reciprocal, s);
  REQUIRE(std::holds_alternative<mifs::Line<double>>(image));
  const auto& line = std::get<mifs::Line<double>>(image);
  CHECK(std::abs(line.p - line.q) >= 1e-12);

  // 1/z maps the circle |z - 1| = 1 onto Re w = 1/2.
  const C far = (reciprocal.a() * C(2, 0) + reciprocal.b()) / (reciprocal.c() * C(2, 0) + reciprocal.d());
  const C other = (reciprocal.a() * C(1, 1) + reciprocal.b()) / (reciprocal.c() * C(1, 1) + reciprocal.d());
  CHECK(oracle::collinearity_defect(line.p, line.q, far) < 1e-9);
  CHECK(oracle::collinearity_defect(line.p, line.q, other) < 1e-9);
  CHECK(std::abs(line.p.real() - 0.5) < 1e-12);
}

TEST_CASE("line criterion in both directions") {
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> u(0, 2 * std::numbers::pi), rad(0.2, 2);
  for (int trial = 0; trial < 300; ++trial) {
    const Moebius t = random_transform(rng);
    const C pole = -t.d() / t.c();
    const double R = rad(rng);
    // Circle through the pole.
    const Circle<double> through(pole + std::polar(R, u(rng)), R);
    const auto degenerate = mifs::image_of_circle(t, through);
    CHECK(std::holds_alternative<mifs::Line<double>>(degenerate));
    // Same radius, pole well off the circle.
    const Circle<double> away(pole + std::polar(2 * R, u(rng)), R);
    CHECK(std::abs(std::abs(t.c() * away.center + t.d()) - away.radius * std::abs(t.c())) > 1e-3);
    CHECK(std::holds_alternative<Circle<double>>(mifs::image_of_circle(t, away)));
  }
}

TEST_CASE("closed-form image circles fit sampled images") {
  std::mt19937_64 rng(29);
  int tested = 0;
  while (tested < 1000) {
    const Moebius t = random_transform(rng);
    const Circle<double> s = random_circle(rng);
    if (std::abs(denominator(t, s)) <= 1e-3) continue;
    const auto image = mifs::image_of_circle(t, s);
    REQUIRE(std::holds_alternative<Circle<double>>(image));
    const auto& circle = std::get<Circle<double>>(image);
    CHECK(fit_error(t, s, circle, 64) <= 1e-8 * std::max(1.0, circle.radius));
    ++tested;
  }
}

TEST_CASE("image of the unit disc") {
  const auto id = mifs::image_of_unit_disc(Moebius::identity());
  CHECK(id.center == C(0));
  CHECK(id.radius == 1.0);

  const auto quarter = mifs::image_of_unit_disc(mifs::normalize(C(0.5), C(0), C(0), C(2)));
  CHECK(quarter.center == C(0));
  CHECK(quarter.radius == 0.25);

  const auto& p = worked::examples()[1][1];
  const auto phi2 = mifs::normalize(p.a, p.b, p.c, p.d);
  const auto image = mifs::image_of_unit_disc(phi2);
  CHECK(std::abs(image.center - C(0.3, -0.4)) < 1e-3);
  CHECK(std::abs(image.radius - 0.4) < 1e-3);

  // |c| = |d|: the unit circle goes to a line.
  CHECK_THROWS_AS(mifs::image_of_unit_disc(mifs::normalize(C(1), C(0), C(1), C(1))), mifs::DegenerateImage);
}

TEST_CASE("unit-disc specialization agrees with the general formula") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 500; ++trial) {
    const Moebius t = random_transform(rng);
    if (std::abs(std::norm(t.d()) - std::norm(t.c())) <= 1e-3) continue;
    const auto special = mifs::image_of_unit_disc(t);
    const auto general = std::get<Circle<double>>(mifs::image_of_circle(t, mifs::unit_circle<double>()));
    const double scale = std::max(1.0, special.radius);
    CHECK(std::abs(special.center - general.center) <= 1e-10 * scale);
    CHECK(std::abs(special.radius - general.radius) <= 1e-10 * scale);
  }
}

TEST_CASE("images compose") {
  std::mt19937_64 rng(37);
  int tested = 0;
  while (tested < 300) {
    const Moebius t = random_transform(rng), u = random_transform(rng);
    const Circle<double> s = random_circle(rng);
    const auto first = mifs::image_of_circle(u, s);
    if (!std::holds_alternative<Circle<double>>(first)) continue;
    const auto& mid = std::get<Circle<double>>(first);
    if (std::abs(denominator(u, s)) < 1e-2 || std::abs(denominator(t, mid)) < 1e-2) continue;
    const Moebius tu = mifs::compose(t, u);
    if (std::abs(denominator(tu, s)) < 1e-2) continue;
    const auto direct = std::get<Circle<double>>(mifs::image_of_circle(tu, s));
    const auto chained = std::get<Circle<double>>(mifs::image_of_circle(t, mid));
    if (direct.radius > 1e3) continue;
    const double scale = std::max(1.0, direct.radius);
    CHECK(std::abs(direct.center - chained.center) <= 1e-7 * scale);
    CHECK(std::abs(direct.radius - chained.radius) <= 1e-7 * scale);
    ++tested;
  }
}

TEST_CASE("circle images are blind to the global sign") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 200; ++trial) {
    const Moebius t = random_transform(rng);
    const Circle<double> s = random_circle(rng);
    const auto plus = mifs::image_of_circle(t, s);
    const auto minus = mifs::image_of_circle(-t, s);
    REQUIRE(plus.index() == minus.index());
    if (const auto* c = std::get_if<Circle<double>>(&plus)) {
      const auto& d = std::get<Circle<double>>(minus);
      CHECK(std::abs(c->center - d.center) <= 1e-12 * std::max(1.0, std::abs(c->center)));
      CHECK(c->radius == d.radius);
    }
  }
}
