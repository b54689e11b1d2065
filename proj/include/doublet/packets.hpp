//==============================================================================
// packets.hpp
// Deterministic random packet generation and the smoothness rules every test
// state has to obey:
//   - spectral mass within 2 bins of the Nyquist mode per axis  < 1e-10
//   - position-space mass within 10% of the box boundary        < 1e-10
// Coordinate multiplication is only trustworthy on states that satisfy both,
// so packet widths are chosen from the lattice geometry to leave margin on
// each side.
//
// Randomness comes from mt19937_64 (bit-identical across platforms) mapped to
// doubles via the top 53 bits, so a seed reproduces the same packet anywhere.
//==============================================================================
#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>

#include "doublet/states.hpp"

namespace doublet {

class DeterministicRng {
 public:
  explicit DeterministicRng(std::uint64_t seed) : eng_(seed) {}

  // Uniform in [0,1): top 53 bits of the generator output.
  double uniform() {
    return static_cast<double>(eng_() >> 11) * 0x1.0p-53;
  }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  cd unit_square_complex() { return cd(uniform(-1.0, 1.0), uniform(-1.0, 1.0)); }

 private:
  std::mt19937_64 eng_;
};

//------------------------------------------------------------------------------
// Tail diagnostics
//------------------------------------------------------------------------------
struct TailReport {
  double nyquist_fraction = 0.0;  // spectral mass within 2 bins of Nyquist
  double edge_fraction = 0.0;     // position mass within 10% of the boundary
};

inline double nyquist_tail_fraction(const AmplitudeSet& amps) {
  amps.check_shape();
  const Lattice& lat = amps.lat;
  double total = 0.0, tail = 0.0;
  for (size_t p = 0; p < lat.points(); ++p) {
    int idx[3] = {0, 0, 0};
    lat.point_axes(p, idx);
    bool near = false;
    for (int a = 0; a < lat.dim; ++a) {
      int dist = std::abs(idx[a] - lat.n / 2);  // ring distance to the Nyquist bin
      dist = std::min(dist, lat.n - dist);
      if (dist <= 2) near = true;
    }
    double mass = 0.0;
    for (int c = 0; c < 4; ++c) mass += std::norm(amps.a[static_cast<size_t>(c)][p]);
    total += mass;
    if (near) tail += mass;
  }
  return total > 0.0 ? tail / total : 0.0;
}

inline double edge_tail_fraction(const SpinorField& field) {
  SpinorField f = with_realization(field, Realization::position);
  const Lattice& lat = f.lat;
  double bound = 0.9 * 0.5 * lat.box_length();
  double total = 0.0, tail = 0.0;
  for (size_t p = 0; p < lat.points(); ++p) {
    auto x = lat.position(p);
    bool near = false;
    for (int a = 0; a < lat.dim; ++a)
      if (std::abs(x[static_cast<size_t>(a)]) >= bound) near = true;
    double mass = 0.0;
    for (int c = 0; c < 4; ++c) mass += std::norm(f.at(p, c));
    total += mass;
    if (near) tail += mass;
  }
  return total > 0.0 ? tail / total : 0.0;
}

inline TailReport tail_report(const AmplitudeSet& amps) {
  TailReport r;
  r.nyquist_fraction = nyquist_tail_fraction(amps);
  r.edge_fraction = edge_tail_fraction(synthesize_sf(amps, 0.0));
  return r;
}

constexpr double kTailLimit = 1e-10;

//------------------------------------------------------------------------------
// Gaussian packet family
//------------------------------------------------------------------------------
struct PacketSpec {
  double width = 0.0;       // spectral width sigma; 0 = choose from the lattice
  double center_max = 0.0;  // max |k| per axis for lobe centers; 0 = choose
  int lobes = 2;            // Gaussian lobes per populated species
  double offset_max = 0.0;  // max position offset per axis
};

// Picks a spectral width that keeps both tails below ~1e-11 and a center range
// compatible with it.  Throws if the lattice is too small to host any packet.
inline PacketSpec default_packet_spec(const Lattice& lat) {
  lat.validate();
  const double decay = std::log(1e11);  // target |.|^2 suppression at the bounds
  PacketSpec spec;
  spec.center_max = std::min(0.16 * lat.nyquist(), 1.0);
  double x_bound = 0.9 * 0.5 * lat.box_length();
  double sigma_min = std::sqrt(decay / (2.0 * x_bound * x_bound));
  double k_margin = lat.nyquist() - 2.0 * lat.dk() - spec.center_max;
  double sigma_max = k_margin / std::sqrt(2.0 * decay);
  if (sigma_max < sigma_min) {
    // Retry with the centers pulled in before giving up.
    spec.center_max *= 0.5;
    k_margin = lat.nyquist() - 2.0 * lat.dk() - spec.center_max;
    sigma_max = k_margin / std::sqrt(2.0 * decay);
    if (sigma_max < sigma_min)
      throw std::invalid_argument("lattice too small for smooth test packets");
  }
  spec.width = std::clamp(0.3, 1.02 * sigma_min, 0.98 * sigma_max);
  spec.offset_max = 2.0 * lat.dx;
  return spec;
}

// Sum of randomly placed Gaussian lobes per species, normalized to unit total
// amplitude norm.  `populated` masks which of the four species receive mass.
inline AmplitudeSet random_amplitudes(const Lattice& lat, DeterministicRng& rng,
                                      const PacketSpec& spec,
                                      std::array<bool, 4> populated = {true, true,
                                                                       true, true}) {
  AmplitudeSet amps = AmplitudeSet::zero(lat);
  double inv_4w2 = 1.0 / (4.0 * spec.width * spec.width);
  for (int c = 0; c < 4; ++c) {
    if (!populated[static_cast<size_t>(c)]) continue;
    for (int lobe = 0; lobe < spec.lobes; ++lobe) {
      std::array<double, 3> kc{0.0, 0.0, 0.0};
      std::array<double, 3> x0{0.0, 0.0, 0.0};
      for (int a = 0; a < lat.dim; ++a) {
        kc[static_cast<size_t>(a)] = rng.uniform(-spec.center_max, spec.center_max);
        x0[static_cast<size_t>(a)] = rng.uniform(-spec.offset_max, spec.offset_max);
      }
      cd coeff = rng.unit_square_complex();
      for (size_t p = 0; p < lat.points(); ++p) {
        auto k = lat.wavevector(p);
        double q2 = 0.0, kx = 0.0;
        for (int a = 0; a < lat.dim; ++a) {
          double dka = k[static_cast<size_t>(a)] - kc[static_cast<size_t>(a)];
          q2 += dka * dka;
          kx += k[static_cast<size_t>(a)] * x0[static_cast<size_t>(a)];
        }
        amps.a[static_cast<size_t>(c)][p] +=
            coeff * std::exp(-q2 * inv_4w2) * std::exp(cd(0.0, -kx));
      }
    }
  }
  return normalized(amps);
}

inline AmplitudeSet random_amplitudes(const Lattice& lat, std::uint64_t seed,
                                      std::array<bool, 4> populated = {true, true,
                                                                       true, true}) {
  DeterministicRng rng(seed);
  return random_amplitudes(lat, rng, default_packet_spec(lat), populated);
}

// Normalized random solution snapshot at time t.
inline SpinorField random_packet(const Lattice& lat, std::uint64_t seed, double t = 0.0) {
  return synthesize_sf(random_amplitudes(lat, seed), t);
}

// Amplitude set supported on a single momentum bin (logical indices per axis).
inline AmplitudeSet single_bin_amplitudes(const Lattice& lat, int species,
                                          const std::array<int, 3>& logical_bin,
                                          cd value = cd(1.0)) {
  if (species < 0 || species > 3)
    throw std::invalid_argument("species index must be 0..3");
  AmplitudeSet amps = AmplitudeSet::zero(lat);
  int idx[3] = {0, 0, 0};
  for (int a = 0; a < lat.dim; ++a) {
    int logical = logical_bin[static_cast<size_t>(a)];
    if (logical < -lat.n / 2 || logical >= lat.n / 2)
      throw std::invalid_argument("bin index outside the momentum grid");
    idx[a] = logical >= 0 ? logical : logical + lat.n;
  }
  amps.a[static_cast<size_t>(species)][lat.axes_point(idx)] = value;
  return amps;
}

}  // namespace doublet
