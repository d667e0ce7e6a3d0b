#include "mifs/config.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <json.hpp>

#include "mifs/errors.hpp"

namespace mifs {

namespace {

using nlohmann::json;

std::complex<double> complex_from(const json& node, const char* key) {
  if (!node.contains(key)) throw ConfigError(std::string("missing field '") + key + "'");
  const json& v = node.at(key);
  if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number())
    throw ConfigError(std::string("field '") + key + "' must be a [re, im] pair");
  return {v[0].get<double>(), v[1].get<double>()};
}

double number_from(const json& node, const char* key) {
  if (!node.contains(key)) throw ConfigError(std::string("missing field '") + key + "'");
  if (!node.at(key).is_number()) throw ConfigError(std::string("field '") + key + "' must be a number");
  return node.at(key).get<double>();
}

json to_pair(std::complex<double> z) { return json::array({z.real(), z.imag()}); }

MapEntry parse_map(const json& node) {
  if (!node.is_object()) throw ConfigError("map entries must be objects");
  const std::string kind = node.value("kind", "");
  if (kind == "spec") {
    DiscImageSpec<double> spec{number_from(node, "r"), complex_from(node, "m"), complex_from(node, "c"), 0};
    if (node.contains("d_phase"))
      spec.d_phase = number_from(node, "d_phase");
    else if (node.contains("d"))
      spec.d_phase = std::arg(complex_from(node, "d"));
    else
      throw ConfigError("spec entry needs 'd_phase' or 'd'");
    return spec;
  }
  if (kind == "coeffs")
    return CoefficientEntry{complex_from(node, "a"), complex_from(node, "b"), complex_from(node, "c"),
                            complex_from(node, "d")};
  throw ConfigError("map kind must be \"spec\" or \"coeffs\"");
}

template <typename T>
T positive_integer(const json& node, const char* key, T fallback) {
  if (!node.contains(key)) return fallback;
  const json& v = node.at(key);
  if (!v.is_number_integer() || v.get<long long>() < 1)
    throw ConfigError(std::string("field '") + key + "' must be a positive integer");
  return static_cast<T>(v.get<long long>());
}

RenderSettings parse_render(const json& node) {
  RenderSettings s;
  if (!node.is_object()) throw ConfigError("'render' must be an object");
  s.width = positive_integer<int>(node, "width", s.width);
  s.height = positive_integer<int>(node, "height", s.height);
  s.points = positive_integer<std::size_t>(node, "points", s.points);
  s.iterations = positive_integer<int>(node, "iterations", s.iterations);
  if (node.contains("viewport")) {
    const json& v = node.at("viewport");
    if (!v.is_array() || v.size() != 4) throw ConfigError("'viewport' must be [x_min, x_max, y_min, y_max]");
    for (const auto& x : v)
      if (!x.is_number()) throw ConfigError("'viewport' entries must be numbers");
    s.viewport = {v[0].get<double>(), v[1].get<double>(), v[2].get<double>(), v[3].get<double>()};
    if (!(s.viewport.x_max > s.viewport.x_min) || !(s.viewport.y_max > s.viewport.y_min))
      throw ConfigError("'viewport' must have positive extent");
  }
  if (node.contains("method")) {
    const std::string method = node.at("method").is_string() ? node.at("method").get<std::string>() : "";
    if (method == "chaos")
      s.method = RenderMethod::Chaos;
    else if (method == "hutchinson")
      s.method = RenderMethod::Hutchinson;
    else
      throw ConfigError("'method' must be \"chaos\" or \"hutchinson\"");
  }
  if (node.contains("seed")) {
    if (!node.at("seed").is_number_unsigned()) throw ConfigError("'seed' must be a non-negative integer");
    s.seed = node.at("seed").get<std::uint64_t>();
  }
  if (node.contains("tol")) {
    s.tol = number_from(node, "tol");
    if (!(s.tol > 0)) throw ConfigError("'tol' must be positive");
  }
  if (node.contains("burn_in")) {
    if (!node.at("burn_in").is_number_unsigned()) throw ConfigError("'burn_in' must be a non-negative integer");
    s.burn_in = node.at("burn_in").get<std::size_t>();
  }
  return s;
}

}  // namespace

MifsConfig parse_config(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ConfigError("configuration must be a JSON object");
  if (!doc.contains("maps") || !doc.at("maps").is_array() || doc.at("maps").empty())
    throw ConfigError("'maps' must be a non-empty array");

  MifsConfig config;
  for (const json& node : doc.at("maps")) config.maps.push_back(parse_map(node));
  if (doc.contains("render")) config.render = parse_render(doc.at("render"));
  return config;
}

MifsConfig load_config(const std::filesystem::path& path) {
  std::string text;
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  } else {
    std::ifstream file(path, std::ios::binary);
    if (!file) throw IoFailure("cannot open " + path.string());
    std::ostringstream buffer;
    buffer << file.rdbuf();
    text = buffer.str();
  }
  return parse_config(text);
}

std::string to_json(const MifsConfig& config, bool include_derived) {
  json maps = json::array();
  for (const MapEntry& entry : config.maps) {
    if (const auto* spec = std::get_if<DiscImageSpec<double>>(&entry)) {
      json node = {{"kind", "spec"}, {"r", spec->r}, {"m", to_pair(spec->m)}, {"c", to_pair(spec->c)},
                   {"d_phase", spec->d_phase}};
      if (include_derived) {
        const Moebius t = transform_of(entry);
        node["derived"] = {{"a", to_pair(t.a())}, {"b", to_pair(t.b())}, {"c", to_pair(t.c())},
                           {"d", to_pair(t.d())}};
      }
      maps.push_back(std::move(node));
    } else {
      const auto& k = std::get<CoefficientEntry>(entry);
      maps.push_back({{"kind", "coeffs"}, {"a", to_pair(k.a)}, {"b", to_pair(k.b)}, {"c", to_pair(k.c)},
                      {"d", to_pair(k.d)}});
    }
  }
  const RenderSettings& r = config.render;
  const json render = {
      {"width", r.width},
      {"height", r.height},
      {"viewport", {r.viewport.x_min, r.viewport.x_max, r.viewport.y_min, r.viewport.y_max}},
      {"method", r.method == RenderMethod::Chaos ? "chaos" : "hutchinson"},
      {"points", r.points},
      {"seed", r.seed},
      {"iterations", r.iterations},
      {"tol", r.tol},
      {"burn_in", r.burn_in},
  };
  return json{{"maps", std::move(maps)}, {"render", render}}.dump(2) + "\n";
}

Moebius transform_of(const MapEntry& entry) {
  if (const auto* spec = std::get_if<DiscImageSpec<double>>(&entry)) return make_contraction(*spec).transform;
  const auto& k = std::get<CoefficientEntry>(entry);
  return normalize(k.a, k.b, k.c, k.d);
}

Mifs<double> build_mifs(const MifsConfig& config) {
  std::vector<Moebius> transforms;
  for (const MapEntry& entry : config.maps) transforms.push_back(transform_of(entry));
  return Mifs<double>::from_transforms(transforms);
}

}  // namespace mifs
