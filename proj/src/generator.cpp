#include "mifs/generator.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "mifs/random.hpp"

namespace mifs {

std::vector<DiscImageSpec<double>> sample_random_specs(int n, std::uint64_t seed, double r_min,
                                                      double r_max) {
  if (n < 1 || n > 64) throw InvalidRange("map count must lie in [1, 64]");
  if (!(r_min > 0 && r_min <= r_max && r_max < 1))
    throw InvalidRange("radius range must satisfy 0 < r_min <= r_max < 1");

  constexpr double kTwoPi = 2 * std::numbers::pi;
  SplitMix64 rng(seed);
  std::vector<DiscImageSpec<double>> specs;
  specs.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const double r = rng.uniform(r_min, r_max);
    const double m_modulus = (1 - r) * std::sqrt(rng.uniform());
    const double m_arg = kTwoPi * rng.uniform();
    const double c_cap = std::min(0.95 * (1 - r) / (2 * r), 5.0);
    const double c_modulus = c_cap * rng.uniform();
    const double c_arg = kTwoPi * rng.uniform();
    const double d_phase = kTwoPi * rng.uniform();
    specs.push_back({r, std::polar(m_modulus, m_arg), std::polar(c_modulus, c_arg), d_phase});
  }
  return specs;
}

Mifs<double> sample_random_mifs(int n, std::uint64_t seed, double r_min, double r_max) {
  std::vector<ContractionCertificate<double>> maps;
  for (const auto& spec : sample_random_specs(n, seed, r_min, r_max))
    maps.push_back(make_contraction(spec));
  return Mifs<double>(std::move(maps));
}

}  // namespace mifs
