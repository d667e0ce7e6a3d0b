#pragma once

#include <complex>
#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "mifs/generator.hpp"
#include "mifs/raster.hpp"

namespace mifs {

/// Raw coefficients; normalized and certified when the system is built.
struct CoefficientEntry {
  std::complex<double> a, b, c, d;
};

using MapEntry = std::variant<DiscImageSpec<double>, CoefficientEntry>;

enum class RenderMethod { Chaos, Hutchinson };

struct RenderSettings {
  int width = 1024;
  int height = 1024;
  Viewport viewport{};
  RenderMethod method = RenderMethod::Chaos;
  /// Orbit length for the chaos game, point budget for Hutchinson iteration.
  std::size_t points = 200000;
  std::uint64_t seed = 1;
  int iterations = 64;
  double tol = 1e-3;
  std::size_t burn_in = 100;
};

/// A system of maps plus rendering parameters, stored as JSON:
///
///   {
///     "maps": [
///       {"kind": "spec", "r": 0.7, "m": [-0.2, 0.2], "c": [0, 0.2], "d_phase": 0.519},
///       {"kind": "coeffs", "a": [1, 0], "b": [0, 0], "c": [0, 0], "d": [2, 0]}
///     ],
///     "render": {"width": 1024, "height": 1024, "viewport": [-1.1, 1.1, -1.1, 1.1],
///                "method": "chaos", "points": 200000, "seed": 1,
///                "iterations": 64, "tol": 0.001, "burn_in": 100}
///   }
///
/// Complex numbers are [re, im]. A spec entry may give "d": [re, im] in place
/// of "d_phase"; only its argument is used. The full schema lives in
/// docs/mifs-config.schema.json.
struct MifsConfig {
  std::vector<MapEntry> maps;
  RenderSettings render{};
};

/// Throws ConfigError on malformed input.
MifsConfig parse_config(std::string_view text);

/// Reads a file, or standard input when path is "-".
MifsConfig load_config(const std::filesystem::path& path);

/// Serializes with shortest round-trip double formatting. Spec entries also
/// carry their derived coefficients under "derived" when include_derived is
/// set; the parser ignores that block.
std::string to_json(const MifsConfig& config, bool include_derived = false);

/// The normalized transform of an entry. Spec entries go through
/// make_contraction and may throw InvalidSpec; coefficient entries may throw
/// DegenerateMap.
Moebius transform_of(const MapEntry& entry);

/// Certifies every entry; throws NotContractive, InvalidSpec or DegenerateMap.
Mifs<double> build_mifs(const MifsConfig& config);

}  // namespace mifs
