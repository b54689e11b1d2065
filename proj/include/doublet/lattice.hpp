//==============================================================================
// lattice.hpp
// Periodic position/momentum lattice with unitary Fourier transforms in the
// (2pi)^{-d/2} convention, the 4-component SpinorField container, and
// application of momentum-diagonal scalar symbols such as omega = sqrt(k^2+m^2).
//
// Storage layout: per axis, storage index j in [0,N) represents the logical
// index n(j) = j for j < N/2 and j-N otherwise, so coordinates and wavenumbers
// run over {-N/2, ..., N/2-1} * step while the plain FFT kernel
// exp(-2pi i j j'/N) realizes exp(-i k x) with no index rolling.  Points are
// row-major over axes (last axis fastest) with the 4 spinor components
// interleaved fastest of all.
//
// All reductions use a fixed serial summation order so results are
// bit-reproducible.
//==============================================================================
#pragma once

#include <fftw3.h>

#include <cmath>
#include <complex>
#include <cstring>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "doublet/clifford.hpp"

namespace doublet {

enum class Realization { position, momentum };
enum class Picture { sf, fw, dirac };

inline const char* to_string(Realization r) {
  return r == Realization::position ? "position" : "momentum";
}
inline const char* to_string(Picture p) {
  switch (p) {
    case Picture::sf: return "sf";
    case Picture::fw: return "fw";
    default: return "dirac";
  }
}

//------------------------------------------------------------------------------
// Lattice geometry.  Units: hbar = c = 1, lengths in 1/mass.
//------------------------------------------------------------------------------
struct Lattice {
  int dim = 1;        // spatial dimension, 1..3
  int n = 64;         // points per axis, even, >= 4
  double dx = 1.0;    // grid spacing
  double mass = 1.0;  // m > 0

  void validate() const {
    if (dim < 1 || dim > 3) throw std::invalid_argument("lattice: dim must be 1, 2 or 3");
    if (n < 4 || n % 2 != 0) throw std::invalid_argument("lattice: n must be even and >= 4");
    if (!(dx > 0.0)) throw std::invalid_argument("lattice: dx must be positive");
    if (!(mass > 0.0)) throw std::invalid_argument("lattice: mass must be positive");
  }

  size_t points() const {
    size_t p = 1;
    for (int a = 0; a < dim; ++a) p *= static_cast<size_t>(n);
    return p;
  }

  double dk() const { return 2.0 * std::numbers::pi / (n * dx); }
  double box_length() const { return n * dx; }
  double nyquist() const { return std::numbers::pi / dx; }

  int logical(int j) const { return j < n / 2 ? j : j - n; }
  double coord(int j) const { return logical(j) * dx; }
  double momentum(int j) const { return logical(j) * dk(); }

  // Storage index of the mode -k along one axis (Nyquist maps to itself).
  int reflect(int j) const { return j == 0 ? 0 : n - j; }

  void point_axes(size_t p, int* idx) const {
    for (int a = dim - 1; a >= 0; --a) {
      idx[a] = static_cast<int>(p % static_cast<size_t>(n));
      p /= static_cast<size_t>(n);
    }
  }
  size_t axes_point(const int* idx) const {
    size_t p = 0;
    for (int a = 0; a < dim; ++a) p = p * static_cast<size_t>(n) + static_cast<size_t>(idx[a]);
    return p;
  }

  // Physical wavevector of a momentum-grid point (components beyond dim are 0).
  std::array<double, 3> wavevector(size_t p) const {
    int idx[3] = {0, 0, 0};
    point_axes(p, idx);
    std::array<double, 3> k{0.0, 0.0, 0.0};
    for (int a = 0; a < dim; ++a) k[static_cast<size_t>(a)] = momentum(idx[a]);
    return k;
  }
  std::array<double, 3> position(size_t p) const {
    int idx[3] = {0, 0, 0};
    point_axes(p, idx);
    std::array<double, 3> x{0.0, 0.0, 0.0};
    for (int a = 0; a < dim; ++a) x[static_cast<size_t>(a)] = coord(idx[a]);
    return x;
  }

  double omega(size_t p) const {
    auto k = wavevector(p);
    return std::sqrt(k[0] * k[0] + k[1] * k[1] + k[2] * k[2] + mass * mass);
  }

  double measure(Realization r) const {
    double step = (r == Realization::position) ? dx : dk();
    double m = 1.0;
    for (int a = 0; a < dim; ++a) m *= step;
    return m;
  }

  friend bool operator==(const Lattice& a, const Lattice& b) {
    return a.dim == b.dim && a.n == b.n && a.dx == b.dx && a.mass == b.mass;
  }
  friend bool operator!=(const Lattice& a, const Lattice& b) { return !(a == b); }
};

//------------------------------------------------------------------------------
// 4-component complex field sampled on the lattice.  Components 0-1 carry the
// electron wave function, components 2-3 the positron wave function (in the
// canonical picture).  data[point*4 + component].
//------------------------------------------------------------------------------
struct SpinorField {
  Lattice lat;
  Realization realization = Realization::position;
  Picture picture = Picture::sf;
  double time = 0.0;
  std::vector<cd> data;

  static SpinorField zero(const Lattice& lat, Realization r = Realization::position,
                          Picture pic = Picture::sf, double t = 0.0) {
    SpinorField f;
    f.lat = lat;
    f.realization = r;
    f.picture = pic;
    f.time = t;
    f.data.assign(lat.points() * 4, cd(0.0));
    return f;
  }

  cd& at(size_t point, int comp) { return data[point * 4 + static_cast<size_t>(comp)]; }
  const cd& at(size_t point, int comp) const {
    return data[point * 4 + static_cast<size_t>(comp)];
  }

  void check_shape() const {
    if (data.size() != lat.points() * 4)
      throw std::invalid_argument("spinor field size does not match its lattice");
  }
};

inline void require_same_lattice(const SpinorField& a, const SpinorField& b) {
  if (a.lat != b.lat) throw std::invalid_argument("fields live on different lattices");
}

//------------------------------------------------------------------------------
// Inner product and norms (fixed summation order).
//------------------------------------------------------------------------------
inline cd inner(const SpinorField& a, const SpinorField& b) {
  require_same_lattice(a, b);
  if (a.realization != b.realization)
    throw std::invalid_argument("inner product requires matching realizations");
  cd acc = 0.0;
  for (size_t i = 0; i < a.data.size(); ++i) acc += std::conj(a.data[i]) * b.data[i];
  return a.lat.measure(a.realization) * acc;
}

inline double squared_norm(const SpinorField& f) {
  double acc = 0.0;
  for (const cd& z : f.data) acc += std::norm(z);
  return f.lat.measure(f.realization) * acc;
}

inline double norm(const SpinorField& f) { return std::sqrt(squared_norm(f)); }

inline double distance(const SpinorField& a, const SpinorField& b) {
  require_same_lattice(a, b);
  if (a.realization != b.realization)
    throw std::invalid_argument("distance requires matching realizations");
  double acc = 0.0;
  for (size_t i = 0; i < a.data.size(); ++i) acc += std::norm(a.data[i] - b.data[i]);
  return std::sqrt(a.lat.measure(a.realization) * acc);
}

//------------------------------------------------------------------------------
// Fourier transforms.  Forward (position -> momentum) uses kernel e^{-ikx}
// with weight (2pi)^{-d/2} dx^d; backward uses e^{+ikx} with (2pi)^{-d/2} dk^d.
// Forward then backward is the identity up to roundoff.  FFTW_ESTIMATE keeps
// plan selection deterministic.
//------------------------------------------------------------------------------
namespace detail {

inline void run_dft(const Lattice& lat, const cd* in, cd* out, int sign) {
  int dims[3] = {lat.n, lat.n, lat.n};
  // Out-of-place c2c transform of the 4 interleaved component arrays.
  fftw_plan plan = fftw_plan_many_dft(
      lat.dim, dims, 4,
      reinterpret_cast<fftw_complex*>(const_cast<cd*>(in)), nullptr, 4, 1,
      reinterpret_cast<fftw_complex*>(out), nullptr, 4, 1, sign, FFTW_ESTIMATE);
  if (plan == nullptr) throw std::runtime_error("fftw plan creation failed");
  fftw_execute(plan);
  fftw_destroy_plan(plan);
}

}  // namespace detail

inline SpinorField to_momentum(const SpinorField& f) {
  f.check_shape();
  if (f.realization != Realization::position)
    throw std::invalid_argument("to_momentum expects a position-realization field");
  SpinorField g = f;
  g.realization = Realization::momentum;
  detail::run_dft(f.lat, f.data.data(), g.data.data(), FFTW_FORWARD);
  double scale =
      std::pow(2.0 * std::numbers::pi, -0.5 * f.lat.dim) * std::pow(f.lat.dx, f.lat.dim);
  for (cd& z : g.data) z *= scale;
  return g;
}

inline SpinorField to_position(const SpinorField& f) {
  f.check_shape();
  if (f.realization != Realization::momentum)
    throw std::invalid_argument("to_position expects a momentum-realization field");
  SpinorField g = f;
  g.realization = Realization::position;
  detail::run_dft(f.lat, f.data.data(), g.data.data(), FFTW_BACKWARD);
  double scale =
      std::pow(2.0 * std::numbers::pi, -0.5 * f.lat.dim) * std::pow(f.lat.dk(), f.lat.dim);
  for (cd& z : g.data) z *= scale;
  return g;
}

inline SpinorField with_realization(const SpinorField& f, Realization r) {
  if (f.realization == r) return f;
  return r == Realization::momentum ? to_momentum(f) : to_position(f);
}

//------------------------------------------------------------------------------
// Momentum-diagonal scalar operators.
//------------------------------------------------------------------------------
struct ScalarSymbol {
  Lattice lat;
  std::vector<cd> values;  // one value per momentum grid point
};

template <typename F>
inline ScalarSymbol make_symbol(const Lattice& lat, F&& value_of_k) {
  ScalarSymbol s;
  s.lat = lat;
  s.values.resize(lat.points());
  for (size_t p = 0; p < s.values.size(); ++p) s.values[p] = value_of_k(lat.wavevector(p));
  return s;
}

inline ScalarSymbol omega_symbol(const Lattice& lat) {
  double m = lat.mass;
  return make_symbol(lat, [m](const std::array<double, 3>& k) {
    return cd(std::sqrt(k[0] * k[0] + k[1] * k[1] + k[2] * k[2] + m * m));
  });
}

inline ScalarSymbol momentum_component_symbol(const Lattice& lat, int axis) {
  return make_symbol(lat, [axis](const std::array<double, 3>& k) {
    return cd(k[static_cast<size_t>(axis - 1)]);
  });
}

// Multiplies mode-by-mode in the momentum realization; the result comes back
// in the caller's realization.
inline SpinorField apply_symbol(const SpinorField& f, const ScalarSymbol& s) {
  f.check_shape();
  if (f.lat != s.lat) throw std::invalid_argument("symbol built for a different lattice");
  if (f.realization == Realization::momentum) {
    SpinorField g = f;
    for (size_t p = 0; p < s.values.size(); ++p)
      for (int c = 0; c < 4; ++c) g.at(p, c) *= s.values[p];
    return g;
  }
  return to_position(apply_symbol(to_momentum(f), s));
}

// omega_hat f: multiplication by sqrt(k^2 + m^2) mode by mode.
inline SpinorField apply_omega(const SpinorField& f) {
  return apply_symbol(f, omega_symbol(f.lat));
}

//------------------------------------------------------------------------------
// Pointwise matrix application (constant matrices commute with the FFT, so any
// realization is fine).
//------------------------------------------------------------------------------
inline SpinorField apply_matrix(const SpinorField& f, const Mat4& m) {
  f.check_shape();
  SpinorField g = f;
  for (size_t p = 0; p < f.lat.points(); ++p) {
    Spinor4 s{f.at(p, 0), f.at(p, 1), f.at(p, 2), f.at(p, 3)};
    Spinor4 r = m.apply(s);
    for (int c = 0; c < 4; ++c) g.at(p, c) = r[c];
  }
  return g;
}

inline SpinorField scale(const SpinorField& f, cd s) {
  SpinorField g = f;
  for (cd& z : g.data) z *= s;
  return g;
}

inline SpinorField add(const SpinorField& a, const SpinorField& b) {
  require_same_lattice(a, b);
  if (a.realization != b.realization)
    throw std::invalid_argument("cannot add fields in different realizations");
  SpinorField g = a;
  for (size_t i = 0; i < g.data.size(); ++i) g.data[i] += b.data[i];
  return g;
}

inline SpinorField sub(const SpinorField& a, const SpinorField& b) {
  return add(a, scale(b, cd(-1.0)));
}

}  // namespace doublet
