//==============================================================================
// config.hpp
// Scenario configuration for the batch front end.  A scenario is a single
// JSON document:
//
// {
//   "lattice":    {"dim": 1, "n": 256, "dx": 0.5, "mass": 1.0},
//   "amplitudes": {"family": "gaussian", "width": 0.0,
//                  "centers": [[0.4],[-0.2],[0.1],[0.0]]}       // or
//                 {"family": "single_mode", "bins": [[3], null, null, [-2]]}
//                 {"family": "custom", "path": "amps.json"}
//   "times":      [0.0, 1.0, 2.0],
//   "suites":     ["algebra", "poincare", "conservation",
//                  "transforms", "frequency", "roundtrip"],
//   "seed":       42,
//   "output":     "out"
// }
//
// gaussian: one Gaussian lobe per species at the given spectral center;
// complex weights are drawn from the seed; width 0 picks a lattice-safe value.
// single_mode: logical bin indices per species, null leaves a species empty.
// custom: amplitude snapshot file in the serialize.hpp layout.
//
// Validation rejects configs whose populated amplitudes put spectral mass
// within 2 bins of Nyquist, and, for the suites that multiply by the
// coordinate (conservation, poincare), packets with mass within 10% of the
// box boundary.
//==============================================================================
#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "doublet/packets.hpp"
#include "doublet/serialize.hpp"

namespace doublet {

enum class AmplitudeFamily { gaussian, single_mode, custom };

struct ScenarioConfig {
  Lattice lattice;
  AmplitudeFamily family = AmplitudeFamily::gaussian;
  double gaussian_width = 0.0;  // 0 = lattice default
  std::array<std::optional<std::array<double, 3>>, 4> gaussian_centers;
  std::array<std::optional<std::array<int, 3>>, 4> single_mode_bins;
  std::string custom_path;
  std::vector<double> times;
  std::vector<std::string> suites;
  std::uint64_t seed = 0;
  std::string output = "out";
};

inline const std::vector<std::string>& known_suites() {
  static const std::vector<std::string> names = {
      "algebra", "poincare", "conservation", "transforms", "frequency", "roundtrip"};
  return names;
}

namespace detail {

template <typename T, size_t N>
std::array<T, N> fixed_vector(const ordered_json& j, const char* what) {
  if (!j.is_array() || j.size() > N)
    throw std::invalid_argument(std::string(what) + ": expected an array of at most " +
                                std::to_string(N) + " numbers");
  std::array<T, N> out{};
  for (size_t i = 0; i < j.size(); ++i) out[i] = j[i].get<T>();
  return out;
}

}  // namespace detail

inline ScenarioConfig parse_config(const ordered_json& j) {
  ScenarioConfig cfg;
  try {
    cfg.lattice = lattice_from_json(j.at("lattice"));
  } catch (const std::exception& e) {
    throw std::invalid_argument(std::string("config.lattice: ") + e.what());
  }

  if (!j.contains("amplitudes") || !j.at("amplitudes").is_object())
    throw std::invalid_argument("config.amplitudes: missing object");
  const auto& amp = j.at("amplitudes");
  std::string family = amp.value("family", "");
  if (family == "gaussian") {
    cfg.family = AmplitudeFamily::gaussian;
    cfg.gaussian_width = amp.value("width", 0.0);
    if (cfg.gaussian_width < 0.0)
      throw std::invalid_argument("config.amplitudes.width: must be >= 0");
    if (!amp.contains("centers") || !amp.at("centers").is_array() ||
        amp.at("centers").size() != 4)
      throw std::invalid_argument(
          "config.amplitudes.centers: expected 4 entries (null = empty species)");
    for (size_t s = 0; s < 4; ++s) {
      const auto& c = amp.at("centers")[s];
      if (c.is_null()) continue;
      cfg.gaussian_centers[s] =
          detail::fixed_vector<double, 3>(c, "config.amplitudes.centers");
    }
  } else if (family == "single_mode") {
    cfg.family = AmplitudeFamily::single_mode;
    if (!amp.contains("bins") || !amp.at("bins").is_array() || amp.at("bins").size() != 4)
      throw std::invalid_argument(
          "config.amplitudes.bins: expected 4 entries (null = empty species)");
    for (size_t s = 0; s < 4; ++s) {
      const auto& b = amp.at("bins")[s];
      if (b.is_null()) continue;
      cfg.single_mode_bins[s] = detail::fixed_vector<int, 3>(b, "config.amplitudes.bins");
    }
  } else if (family == "custom") {
    cfg.family = AmplitudeFamily::custom;
    cfg.custom_path = amp.value("path", "");
    if (cfg.custom_path.empty())
      throw std::invalid_argument("config.amplitudes.path: required for the custom family");
  } else {
    throw std::invalid_argument(
        "config.amplitudes.family: must be gaussian, single_mode or custom");
  }

  if (!j.contains("times") || !j.at("times").is_array() || j.at("times").empty())
    throw std::invalid_argument("config.times: expected a non-empty array");
  for (const auto& t : j.at("times")) cfg.times.push_back(t.get<double>());

  if (!j.contains("suites") || !j.at("suites").is_array() || j.at("suites").empty())
    throw std::invalid_argument("config.suites: expected a non-empty array of suite names");
  for (const auto& s : j.at("suites")) {
    std::string name = s.get<std::string>();
    bool known = false;
    for (const auto& k : known_suites()) known = known || k == name;
    if (!known) throw std::invalid_argument("config.suites: unknown suite " + name);
    cfg.suites.push_back(name);
  }

  if (!j.contains("seed")) throw std::invalid_argument("config.seed: required");
  cfg.seed = j.at("seed").get<std::uint64_t>();
  cfg.output = j.value("output", "out");
  if (cfg.output.empty()) throw std::invalid_argument("config.output: must not be empty");
  return cfg;
}

inline ordered_json config_to_json(const ScenarioConfig& cfg) {
  ordered_json amp;
  switch (cfg.family) {
    case AmplitudeFamily::gaussian: {
      amp["family"] = "gaussian";
      amp["width"] = cfg.gaussian_width;
      ordered_json centers = ordered_json::array();
      for (const auto& c : cfg.gaussian_centers) {
        if (!c) { centers.push_back(nullptr); continue; }
        ordered_json v = ordered_json::array();
        for (int a = 0; a < cfg.lattice.dim; ++a) v.push_back((*c)[static_cast<size_t>(a)]);
        centers.push_back(v);
      }
      amp["centers"] = centers;
      break;
    }
    case AmplitudeFamily::single_mode: {
      amp["family"] = "single_mode";
      ordered_json bins = ordered_json::array();
      for (const auto& b : cfg.single_mode_bins) {
        if (!b) { bins.push_back(nullptr); continue; }
        ordered_json v = ordered_json::array();
        for (int a = 0; a < cfg.lattice.dim; ++a) v.push_back((*b)[static_cast<size_t>(a)]);
        bins.push_back(v);
      }
      amp["bins"] = bins;
      break;
    }
    case AmplitudeFamily::custom:
      amp["family"] = "custom";
      amp["path"] = cfg.custom_path;
      break;
  }
  return ordered_json{{"lattice", lattice_to_json(cfg.lattice)},
                      {"amplitudes", amp},
                      {"times", cfg.times},
                      {"suites", cfg.suites},
                      {"seed", cfg.seed},
                      {"output", cfg.output}};
}

// Materializes the configured amplitude family (normalized).
inline AmplitudeSet build_amplitudes(const ScenarioConfig& cfg) {
  const Lattice& lat = cfg.lattice;
  switch (cfg.family) {
    case AmplitudeFamily::gaussian: {
      PacketSpec spec = default_packet_spec(lat);
      if (cfg.gaussian_width > 0.0) spec.width = cfg.gaussian_width;
      DeterministicRng rng(cfg.seed);
      AmplitudeSet amps = AmplitudeSet::zero(lat);
      double inv_4w2 = 1.0 / (4.0 * spec.width * spec.width);
      bool any = false;
      for (size_t s = 0; s < 4; ++s) {
        if (!cfg.gaussian_centers[s]) continue;
        any = true;
        cd coeff = rng.unit_square_complex();
        const auto& kc = *cfg.gaussian_centers[s];
        for (size_t p = 0; p < lat.points(); ++p) {
          auto k = lat.wavevector(p);
          double q2 = 0.0;
          for (int a = 0; a < lat.dim; ++a) {
            double d = k[static_cast<size_t>(a)] - kc[static_cast<size_t>(a)];
            q2 += d * d;
          }
          amps.a[s][p] += coeff * std::exp(-q2 * inv_4w2);
        }
      }
      if (!any)
        throw std::invalid_argument("config.amplitudes.centers: all species are empty");
      return normalized(amps);
    }
    case AmplitudeFamily::single_mode: {
      AmplitudeSet amps = AmplitudeSet::zero(lat);
      bool any = false;
      for (size_t s = 0; s < 4; ++s) {
        if (!cfg.single_mode_bins[s]) continue;
        any = true;
        AmplitudeSet one =
            single_bin_amplitudes(lat, static_cast<int>(s), *cfg.single_mode_bins[s]);
        for (size_t p = 0; p < lat.points(); ++p) amps.a[s][p] += one.a[s][p];
      }
      if (!any) throw std::invalid_argument("config.amplitudes.bins: all species are empty");
      return normalized(amps);
    }
    default: {
      AmplitudeSet amps = amplitudes_from_json(read_json_file(cfg.custom_path));
      if (amps.lat != cfg.lattice)
        throw std::invalid_argument(
            "custom amplitude file lattice does not match config.lattice");
      return normalized(amps);
    }
  }
}

// Family-level smoothness validation; throws with the offending rule.
inline void validate_scenario(const ScenarioConfig& cfg, const AmplitudeSet& amps) {
  if (nyquist_tail_fraction(amps) > kTailLimit)
    throw std::invalid_argument(
        "config.amplitudes: spectral mass within 2 bins of Nyquist exceeds 1e-10");
  bool needs_localized = false;
  for (const auto& s : cfg.suites)
    needs_localized = needs_localized || s == "conservation" || s == "poincare";
  if (needs_localized) {
    double edge = edge_tail_fraction(synthesize_sf(amps, cfg.times.front()));
    if (edge > kTailLimit)
      throw std::invalid_argument(
          "config.amplitudes: coordinate-weighted suites need packets with position "
          "mass below 1e-10 in the outer 10% of the box");
  }
}

}  // namespace doublet
