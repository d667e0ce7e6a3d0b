// mifs: build, check and render Moebius iterated function systems on the
// unit disc.
//
// Exit codes: 0 success, 1 a map fails validation, 2 I/O or parse error.

#include <cmath>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mifs/config.hpp"
#include "mifs/contraction.hpp"
#include "mifs/errors.hpp"
#include "mifs/generator.hpp"
#include "mifs/raster.hpp"
#include "mifs/render.hpp"

namespace {

using mifs::MapEntry;
using mifs::MifsConfig;

constexpr int kOk = 0;
constexpr int kValidationFailure = 1;
constexpr int kIoFailure = 2;

std::string format_real(double x, int digits) {
  if (x == 0) x = 0;  // drop the sign of -0
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, x);
  return buf;
}

std::string format_complex(std::complex<double> z, int digits = 12) {
  if (z.imag() == 0) return format_real(z.real(), digits);
  const std::string im = format_real(std::abs(z.imag()), digits) + "i";
  if (z.real() == 0) return (z.imag() < 0 ? "-" : "") + im;
  return format_real(z.real(), digits) + (z.imag() < 0 ? "-" : "+") + im;
}

std::complex<double> parse_complex(const std::string& text) {
  const auto comma = text.find(',');
  try {
    std::size_t used = 0;
    if (comma == std::string::npos) {
      const double re = std::stod(text, &used);
      if (used != text.size()) throw std::invalid_argument(text);
      return {re, 0};
    }
    const std::string re_text = text.substr(0, comma), im_text = text.substr(comma + 1);
    const double re = std::stod(re_text, &used);
    if (used != re_text.size()) throw std::invalid_argument(text);
    const double im = std::stod(im_text, &used);
    if (used != im_text.size()) throw std::invalid_argument(text);
    return {re, im};
  } catch (const std::exception&) {
    throw mifs::ConfigError("cannot parse complex number '" + text + "' (expected re or re,im)");
  }
}

// Either a config file or inline flags describing one map.
struct MapSource {
  std::string config_path;
  std::optional<std::string> a, b, c, d;
  std::optional<double> r, d_phase;
  std::optional<std::string> m;

  void add_coefficient_flags(CLI::App* cmd) {
    cmd->add_option("--a", a, "coefficient a as re,im");
    cmd->add_option("--b", b, "coefficient b as re,im");
    cmd->add_option("--c", c, "coefficient c as re,im");
    cmd->add_option("--d", d, "coefficient d as re,im");
  }

  void add_spec_flags(CLI::App* cmd) {
    cmd->add_option("--r", r, "image radius, 0 < r < 1");
    cmd->add_option("--m", m, "image center as re,im");
    cmd->add_option("--c", c, "free coefficient c as re,im");
    cmd->add_option("--d-phase", d_phase, "argument of d in radians");
  }

  MifsConfig coefficients() const {
    if (!config_path.empty()) return mifs::load_config(config_path);
    if (!a || !b || !c || !d) throw mifs::ConfigError("give a config file or all of --a --b --c --d");
    return MifsConfig{{mifs::CoefficientEntry{parse_complex(*a), parse_complex(*b), parse_complex(*c),
                                              parse_complex(*d)}}};
  }

  MifsConfig spec() const {
    if (!config_path.empty()) return mifs::load_config(config_path);
    if (!r || !m || !c || !d_phase) throw mifs::ConfigError("give a config file or all of --r --m --c --d-phase");
    return MifsConfig{{mifs::DiscImageSpec<double>{*r, parse_complex(*m), parse_complex(*c), *d_phase}}};
  }
};

int run_check(const MifsConfig& config) {
  int status = kOk;
  for (std::size_t i = 0; i < config.maps.size(); ++i) {
    const mifs::Moebius t = mifs::transform_of(config.maps[i]);
    const auto failure = mifs::contraction_failure(t);
    std::cout << "map " << i + 1 << "\n";
    std::cout << "  a: " << format_complex(t.a()) << "\n  b: " << format_complex(t.b()) << "\n  c: "
              << format_complex(t.c()) << "\n  d: " << format_complex(t.d()) << "\n";
    std::cout << "  maps_into_disc: " << (mifs::check_maps_into_disc(t) ? "true" : "false") << "\n";
    std::cout << "  contractive: " << (failure ? "false" : "true") << "\n";
    if (failure) {
      std::cout << "  failed_condition: " << (*failure == mifs::ContractionFailure::ConditionI ? "i" : "ii")
                << "\n";
      std::cerr << "map " << i + 1 << ": not a contraction of the unit disc: " << mifs::describe(*failure)
                << "\n";
      status = kValidationFailure;
      continue;
    }
    const auto cert = mifs::certify_contraction(t);
    std::cout << "  lipschitz: " << format_real(cert.lipschitz, 12) << "\n";
    std::cout << "  min_denominator: " << format_real(cert.min_denominator, 12) << "\n";
    std::cout << "  image_center: " << format_complex(cert.image.center) << "\n";
    std::cout << "  image_radius: " << format_real(cert.image.radius, 12) << "\n";
  }
  return status;
}

int run_gen(const MifsConfig& config, bool as_json) {
  MifsConfig out;
  out.render = config.render;
  for (std::size_t i = 0; i < config.maps.size(); ++i) {
    const mifs::Moebius t = mifs::transform_of(config.maps[i]);
    out.maps.push_back(mifs::CoefficientEntry{t.a(), t.b(), t.c(), t.d()});
    if (!as_json) {
      std::cout << "map " << i + 1 << "\n";
      std::cout << "  a = " << format_complex(t.a()) << "\n  b = " << format_complex(t.b()) << "\n  c = "
                << format_complex(t.c()) << "\n  d = " << format_complex(t.d()) << "\n";
    }
  }
  if (as_json) std::cout << mifs::to_json(out);
  return kOk;
}

int run_recover(const MifsConfig& config) {
  for (std::size_t i = 0; i < config.maps.size(); ++i) {
    const auto image = mifs::recover_disc_image(mifs::transform_of(config.maps[i]));
    std::cout << "map " << i + 1 << "\n";
    std::cout << "  r = " << format_real(image.r, 12) << "\n  m = " << format_complex(image.m) << "\n";
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Build, check and render Moebius iterated function systems on the unit disc"};
  app.require_subcommand(1);

  MapSource check_src, gen_src, recover_src;
  bool gen_json = false;

  auto* check = app.add_subcommand("check", "Certify each map as a contraction of the unit disc");
  check->add_option("config", check_src.config_path, "MIFS config (JSON), '-' for stdin");
  check_src.add_coefficient_flags(check);

  auto* gen = app.add_subcommand("gen", "Compute normalized coefficients from disc-image parameters");
  gen->add_option("config", gen_src.config_path, "MIFS config (JSON), '-' for stdin");
  gen_src.add_spec_flags(gen);
  gen->add_flag("--json", gen_json, "emit a coefficient config with full double precision");

  auto* recover = app.add_subcommand("recover", "Recover image radius r and center m from coefficients");
  recover->add_option("config", recover_src.config_path, "MIFS config (JSON), '-' for stdin");
  recover_src.add_coefficient_flags(recover);

  int sample_n = 3;
  std::uint64_t sample_seed = 1;
  double r_min = 0.3, r_max = 0.6;
  auto* sample = app.add_subcommand("sample", "Emit a random certified system as a config");
  sample->add_option("-n,--maps", sample_n, "number of maps (1..64)");
  sample->add_option("--seed", sample_seed, "generator seed");
  sample->add_option("--r-min", r_min, "smallest image radius");
  sample->add_option("--r-max", r_max, "largest image radius");

  std::string render_config, output;
  std::optional<std::string> method;
  std::optional<std::size_t> points;
  std::optional<std::uint64_t> seed;
  std::optional<int> width, height;
  auto* attractor = app.add_subcommand("attractor", "Render the attractor to a PPM image");
  auto* circles = app.add_subcommand("circles", "Render the unit circle and the image circles to a PPM image");
  for (auto* cmd : {attractor, circles}) {
    cmd->add_option("config", render_config, "MIFS config (JSON), '-' for stdin")->required();
    cmd->add_option("-o,--output", output, "output PPM path")->required();
    cmd->add_option("--width", width, "raster width");
    cmd->add_option("--height", height, "raster height");
  }
  attractor->add_option("--method", method, "chaos or hutchinson")->check(CLI::IsMember({"chaos", "hutchinson"}));
  attractor->add_option("--points", points, "chaos orbit length or Hutchinson point budget");
  attractor->add_option("--seed", seed, "random seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kIoFailure;
  }

  try {
    if (*check) return run_check(check_src.coefficients());
    if (*gen) return run_gen(gen_src.spec(), gen_json);
    if (*recover) return run_recover(recover_src.coefficients());
    if (*sample) {
      MifsConfig config;
      for (const auto& spec : mifs::sample_random_specs(sample_n, sample_seed, r_min, r_max))
        config.maps.push_back(spec);
      config.render.seed = sample_seed;
      std::cout << mifs::to_json(config, true);
      return kOk;
    }
    MifsConfig config = mifs::load_config(render_config);
    if (width) config.render.width = *width;
    if (height) config.render.height = *height;
    if (points) config.render.points = *points;
    if (seed) config.render.seed = *seed;
    if (method) config.render.method = *method == "chaos" ? mifs::RenderMethod::Chaos : mifs::RenderMethod::Hutchinson;
    const auto sys = mifs::build_mifs(config);
    const mifs::Raster raster =
        *attractor ? mifs::render_attractor(sys, config.render) : mifs::render_disc_images(sys, config.render);
    mifs::write_pnm(raster, output);
    return kOk;
  } catch (const mifs::IoFailure& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kIoFailure;
  } catch (const mifs::ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kIoFailure;
  } catch (const mifs::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kValidationFailure;
  }
}
