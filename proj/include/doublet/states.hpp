//==============================================================================
// states.hpp
// General solutions from momentum-spin amplitudes.
//
// AmplitudeSet holds the four amplitude functions on the momentum grid in the
// order (a-_+, a-_-, a+_-, a+_+) matching the basis orts d1..d4: electron
// spin +-1/2 first, then positron spin -1/2, +1/2.
//
// Canonical (sf) solution:   f(t,x) = sum_k w e^{-i w(k) t + i k.x} a_c(k) d_c
// Diagonalized (fw) solution: electron part as above, positron part with
// e^{+i w t - i k.x} and conjugated amplitudes, which is exactly what
// conjugating the lower components of the sf solution produces.
//==============================================================================
#pragma once

#include <array>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "doublet/lattice.hpp"

namespace doublet {

struct AmplitudeSet {
  Lattice lat;
  // [0] a-_+, [1] a-_-, [2] a+_-, [3] a+_+ ; one value per momentum point.
  std::array<std::vector<cd>, 4> a;

  static AmplitudeSet zero(const Lattice& lat) {
    AmplitudeSet s;
    s.lat = lat;
    for (auto& v : s.a) v.assign(lat.points(), cd(0.0));
    return s;
  }

  void check_shape() const {
    for (const auto& v : a)
      if (v.size() != lat.points())
        throw std::invalid_argument("amplitude set size does not match its lattice");
  }
};

inline double squared_amplitude_norm(const AmplitudeSet& s) {
  s.check_shape();
  double acc = 0.0;
  for (size_t p = 0; p < s.lat.points(); ++p)
    for (int c = 0; c < 4; ++c) acc += std::norm(s.a[static_cast<size_t>(c)][p]);
  return s.lat.measure(Realization::momentum) * acc;
}

inline AmplitudeSet scaled(const AmplitudeSet& s, cd factor) {
  AmplitudeSet r = s;
  for (auto& v : r.a)
    for (cd& z : v) z *= factor;
  return r;
}

inline AmplitudeSet normalized(const AmplitudeSet& s) {
  double n2 = squared_amplitude_norm(s);
  if (n2 <= 0.0) throw std::invalid_argument("cannot normalize a zero amplitude set");
  return scaled(s, cd(1.0 / std::sqrt(n2)));
}

// Packs the amplitudes into a momentum-realization field at t = 0 (the
// amplitude space carries the same lattice quadrature).
inline SpinorField amplitudes_as_field(const AmplitudeSet& s) {
  s.check_shape();
  SpinorField g = SpinorField::zero(s.lat, Realization::momentum, Picture::sf, 0.0);
  for (size_t p = 0; p < s.lat.points(); ++p)
    for (int c = 0; c < 4; ++c) g.at(p, c) = s.a[static_cast<size_t>(c)][p];
  return g;
}

//------------------------------------------------------------------------------
// Solution synthesis
//------------------------------------------------------------------------------

inline SpinorField synthesize_sf(const AmplitudeSet& amps, double t) {
  amps.check_shape();
  SpinorField g = SpinorField::zero(amps.lat, Realization::momentum, Picture::sf, t);
  for (size_t p = 0; p < amps.lat.points(); ++p) {
    cd phase = std::exp(cd(0.0, -amps.lat.omega(p) * t));
    for (int c = 0; c < 4; ++c) g.at(p, c) = phase * amps.a[static_cast<size_t>(c)][p];
  }
  SpinorField f = to_position(g);
  f.picture = Picture::sf;
  f.time = t;
  return f;
}

inline SpinorField synthesize_fw(const AmplitudeSet& amps, double t) {
  amps.check_shape();
  const Lattice& lat = amps.lat;
  SpinorField g = SpinorField::zero(lat, Realization::momentum, Picture::fw, t);
  for (size_t p = 0; p < lat.points(); ++p) {
    double w = lat.omega(p);
    cd e_minus = std::exp(cd(0.0, -w * t));
    cd e_plus = std::exp(cd(0.0, +w * t));
    g.at(p, 0) = e_minus * amps.a[0][p];
    g.at(p, 1) = e_minus * amps.a[1][p];
    // Positron part: e^{+i w t - i k.x} conj(a).  Written over the e^{+ikx}
    // synthesis kernel this populates bin k with conj(a(-k)).
    int idx[3] = {0, 0, 0};
    lat.point_axes(p, idx);
    int ridx[3] = {0, 0, 0};
    for (int a = 0; a < lat.dim; ++a) ridx[a] = lat.reflect(idx[a]);
    size_t rp = lat.axes_point(ridx);
    g.at(p, 2) = e_plus * std::conj(amps.a[2][rp]);
    g.at(p, 3) = e_plus * std::conj(amps.a[3][rp]);
  }
  SpinorField f = to_position(g);
  f.picture = Picture::fw;
  f.time = t;
  return f;
}

// Inverse of synthesize_sf at a fixed time: strip the evolution phases from
// the momentum representation of the snapshot.
inline AmplitudeSet analyze_sf(const SpinorField& field, double t) {
  field.check_shape();
  SpinorField g = with_realization(field, Realization::momentum);
  AmplitudeSet amps = AmplitudeSet::zero(field.lat);
  for (size_t p = 0; p < field.lat.points(); ++p) {
    cd unphase = std::exp(cd(0.0, +field.lat.omega(p) * t));
    for (int c = 0; c < 4; ++c) amps.a[static_cast<size_t>(c)][p] = unphase * g.at(p, c);
  }
  return amps;
}

//------------------------------------------------------------------------------
// Frequency-content split.
//
// Given two snapshots of the same exactly-propagated solution at times t0 and
// t0+dt, each momentum mode and component is decomposed into its e^{-i w t}
// (positive-frequency) and e^{+i w t} (negative-frequency) branches by solving
// the two-point phase system per mode.  Returns the squared-norm content of
// each branch.
//------------------------------------------------------------------------------
struct FrequencyContent {
  double positive_sq = 0.0;
  double negative_sq = 0.0;
};

inline FrequencyContent frequency_split(const SpinorField& first,
                                        const SpinorField& second) {
  require_same_lattice(first, second);
  double dt = second.time - first.time;
  if (dt == 0.0) throw std::invalid_argument("frequency split needs two distinct times");
  SpinorField u0 = with_realization(first, Realization::momentum);
  SpinorField u1 = with_realization(second, Realization::momentum);

  double total = 0.0;
  for (const cd& z : u0.data) total += std::norm(z);
  double populated_floor = 1e-24 * std::max(total, 1e-300);

  const Lattice& lat = first.lat;
  double pos = 0.0, neg = 0.0;
  for (size_t p = 0; p < lat.points(); ++p) {
    double w = lat.omega(p);
    cd em = std::exp(cd(0.0, -w * dt));
    cd ep = std::exp(cd(0.0, +w * dt));
    cd det = ep - em;  // 2 i sin(w dt)
    for (int c = 0; c < 4; ++c) {
      cd a0 = u0.at(p, c), a1 = u1.at(p, c);
      double mass_here = std::norm(a0) + std::norm(a1);
      if (mass_here <= populated_floor) continue;
      if (std::abs(det) < 1e-8)
        throw std::runtime_error(
            "frequency split ill-conditioned: w*dt is a multiple of pi on a populated mode");
      cd p_branch = (ep * a0 - a1) / det;
      cd m_branch = (a1 - em * a0) / det;
      pos += std::norm(p_branch);
      neg += std::norm(m_branch);
    }
  }
  double meas = lat.measure(Realization::momentum);
  return FrequencyContent{meas * pos, meas * neg};
}

}  // namespace doublet
