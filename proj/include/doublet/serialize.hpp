//==============================================================================
// serialize.hpp
// JSON snapshot layout for fields and amplitude sets, the machine-readable
// check report, and the conservation CSV.
//
// Field snapshot:
//   { "lattice": {"dim","n","dx","mass"}, "realization": "position"|"momentum",
//     "picture": "sf"|"fw"|"dirac", "time": t,
//     "data": [[re,im], ...] }        // row-major storage order, the four
//                                     // components of a point adjacent
// Amplitude snapshot:
//   { "lattice": {...},
//     "amplitudes": { "a_minus_plus": [[re,im],...], "a_minus_minus": ...,
//                     "a_plus_minus": ..., "a_plus_plus": ... } }
//
// Doubles are emitted as shortest round-trip decimal literals, so write/read
// reproduces every value bit-exactly; non-finite values are rejected.
//==============================================================================
#pragma once

#include <cstdio>
#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "doublet/check.hpp"
#include "doublet/observables.hpp"
#include "doublet/states.hpp"

namespace doublet {

using ordered_json = nlohmann::ordered_json;

namespace detail {

inline void require_finite(double x, const char* what) {
  if (!std::isfinite(x)) throw std::invalid_argument(std::string(what) + " is not finite");
}

inline ordered_json complex_array(const std::vector<cd>& values) {
  ordered_json arr = ordered_json::array();
  for (const cd& z : values) {
    require_finite(z.real(), "serialized value");
    require_finite(z.imag(), "serialized value");
    arr.push_back(ordered_json::array({z.real(), z.imag()}));
  }
  return arr;
}

inline std::vector<cd> complex_vector(const ordered_json& arr, size_t expected) {
  if (!arr.is_array() || arr.size() != expected)
    throw std::invalid_argument("complex data array has the wrong length");
  std::vector<cd> out;
  out.reserve(expected);
  for (const auto& pair : arr) {
    if (!pair.is_array() || pair.size() != 2)
      throw std::invalid_argument("complex entries must be [re, im] pairs");
    out.emplace_back(pair[0].get<double>(), pair[1].get<double>());
  }
  return out;
}

}  // namespace detail

inline ordered_json lattice_to_json(const Lattice& lat) {
  return ordered_json{{"dim", lat.dim}, {"n", lat.n}, {"dx", lat.dx}, {"mass", lat.mass}};
}

inline Lattice lattice_from_json(const ordered_json& j) {
  Lattice lat;
  lat.dim = j.at("dim").get<int>();
  lat.n = j.at("n").get<int>();
  lat.dx = j.at("dx").get<double>();
  lat.mass = j.at("mass").get<double>();
  lat.validate();
  return lat;
}

inline ordered_json field_to_json(const SpinorField& f) {
  f.check_shape();
  ordered_json j;
  j["lattice"] = lattice_to_json(f.lat);
  j["realization"] = to_string(f.realization);
  j["picture"] = to_string(f.picture);
  detail::require_finite(f.time, "field time");
  j["time"] = f.time;
  j["data"] = detail::complex_array(f.data);
  return j;
}

inline SpinorField field_from_json(const ordered_json& j) {
  SpinorField f;
  f.lat = lattice_from_json(j.at("lattice"));
  std::string r = j.at("realization").get<std::string>();
  if (r == "position") f.realization = Realization::position;
  else if (r == "momentum") f.realization = Realization::momentum;
  else throw std::invalid_argument("unknown realization: " + r);
  std::string p = j.at("picture").get<std::string>();
  if (p == "sf") f.picture = Picture::sf;
  else if (p == "fw") f.picture = Picture::fw;
  else if (p == "dirac") f.picture = Picture::dirac;
  else throw std::invalid_argument("unknown picture: " + p);
  f.time = j.at("time").get<double>();
  f.data = detail::complex_vector(j.at("data"), f.lat.points() * 4);
  return f;
}

inline ordered_json amplitudes_to_json(const AmplitudeSet& amps) {
  amps.check_shape();
  ordered_json j;
  j["lattice"] = lattice_to_json(amps.lat);
  ordered_json a;
  a["a_minus_plus"] = detail::complex_array(amps.a[0]);
  a["a_minus_minus"] = detail::complex_array(amps.a[1]);
  a["a_plus_minus"] = detail::complex_array(amps.a[2]);
  a["a_plus_plus"] = detail::complex_array(amps.a[3]);
  j["amplitudes"] = a;
  return j;
}

inline AmplitudeSet amplitudes_from_json(const ordered_json& j) {
  AmplitudeSet amps;
  amps.lat = lattice_from_json(j.at("lattice"));
  const auto& a = j.at("amplitudes");
  size_t np = amps.lat.points();
  amps.a[0] = detail::complex_vector(a.at("a_minus_plus"), np);
  amps.a[1] = detail::complex_vector(a.at("a_minus_minus"), np);
  amps.a[2] = detail::complex_vector(a.at("a_plus_minus"), np);
  amps.a[3] = detail::complex_vector(a.at("a_plus_plus"), np);
  return amps;
}

//------------------------------------------------------------------------------
// Check report
//------------------------------------------------------------------------------
struct SuiteResult {
  std::string name;
  std::vector<CheckResult> checks;

  bool pass() const { return all_pass(checks); }
};

inline ordered_json suite_to_json(const SuiteResult& s) {
  ordered_json checks = ordered_json::array();
  for (const CheckResult& c : s.checks) {
    checks.push_back(ordered_json{{"name", c.name},
                                  {"residual", c.residual},
                                  {"tolerance", c.tolerance},
                                  {"pass", c.pass}});
  }
  return ordered_json{{"name", s.name}, {"pass", s.pass()}, {"checks", checks}};
}

inline ordered_json report_to_json(const std::vector<SuiteResult>& suites,
                                   const ordered_json& config_echo) {
  bool pass = true;
  ordered_json arr = ordered_json::array();
  for (const SuiteResult& s : suites) {
    pass = pass && s.pass();
    arr.push_back(suite_to_json(s));
  }
  return ordered_json{{"config", config_echo}, {"pass", pass}, {"suites", arr}};
}

inline void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << text;
  if (!out) throw std::runtime_error("write failed: " + path);
}

inline void write_json_file(const std::string& path, const ordered_json& j) {
  write_text_file(path, j.dump(2) + "\n");
}

inline ordered_json read_json_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open for reading: " + path);
  return ordered_json::parse(in);
}

//------------------------------------------------------------------------------
// Conservation CSV: header row then one row per time; the first column is the
// time, then the real part of each audited mean in the report's fixed order.
//------------------------------------------------------------------------------
inline std::string conservation_csv(const ConservationReport& rep) {
  auto fmt = [](double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return std::string(buf);
  };
  std::string csv = "time";
  for (const std::string& n : rep.names) csv += "," + n;
  csv += "\n";
  for (size_t ti = 0; ti < rep.times.size(); ++ti) {
    csv += fmt(rep.times[ti]);
    for (size_t q = 0; q < rep.names.size(); ++q)
      csv += "," + fmt(rep.values[q][ti].real());
    csv += "\n";
  }
  return csv;
}

}  // namespace doublet
