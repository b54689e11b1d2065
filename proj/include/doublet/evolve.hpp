//==============================================================================
// evolve.hpp
// Exact momentum-space propagators for the three pictures.
//
// Per momentum mode the step matrix is
//   sf:    e^{-i w dt} I4
//   fw:    e^{-i g0 w dt}      = diag(e^{-i w dt} I2, e^{+i w dt} I2)
//   dirac: e^{-i H(k) dt},  H(k) = alpha.k + beta m,
// where H(k)^2 = w^2 I4 gives the closed form
//   e^{-i H dt} = cos(w dt) I4 - i sin(w dt) H(k)/w.
//==============================================================================
#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

#include "doublet/clifford.hpp"
#include "doublet/lattice.hpp"

namespace doublet {

struct Propagator {
  Picture picture = Picture::sf;
  double dt = 0.0;
  Lattice lat;
  std::vector<Mat4> mode_matrices;  // one unitary 4x4 matrix per momentum point
};

inline Mat4 dirac_hamiltonian(const Lattice& lat, const std::array<double, 3>& k) {
  static const std::array<Mat4, 3> alpha = alpha_matrices();
  Mat4 h = cd(lat.mass) * gamma0();
  for (int a = 0; a < lat.dim; ++a)
    h = h + cd(k[static_cast<size_t>(a)]) * alpha[static_cast<size_t>(a)];
  return h;
}

inline Propagator build_propagator(const Lattice& lat, Picture picture, double dt) {
  lat.validate();
  if (!std::isfinite(dt)) throw std::invalid_argument("propagator: dt must be finite");
  Propagator prop;
  prop.picture = picture;
  prop.dt = dt;
  prop.lat = lat;
  prop.mode_matrices.resize(lat.points());
  for (size_t p = 0; p < lat.points(); ++p) {
    double w = lat.omega(p);
    switch (picture) {
      case Picture::sf: {
        cd ph = std::exp(cd(0.0, -w * dt));
        prop.mode_matrices[p] = Mat4::diag(ph, ph, ph, ph);
        break;
      }
      case Picture::fw: {
        cd em = std::exp(cd(0.0, -w * dt));
        cd ep = std::exp(cd(0.0, +w * dt));
        prop.mode_matrices[p] = Mat4::diag(em, em, ep, ep);
        break;
      }
      case Picture::dirac: {
        Mat4 h = dirac_hamiltonian(lat, lat.wavevector(p));
        Mat4 u = cd(std::cos(w * dt)) * Mat4::identity() +
                 cd(0.0, -std::sin(w * dt) / w) * h;
        prop.mode_matrices[p] = u;
        break;
      }
    }
  }
  return prop;
}

// Advances the field by one step; the result keeps the caller's realization.
inline SpinorField step(const SpinorField& field, const Propagator& prop) {
  field.check_shape();
  if (field.lat != prop.lat)
    throw std::invalid_argument("step: field and propagator lattices differ");
  if (field.picture != prop.picture)
    throw std::invalid_argument("step: field picture does not match the propagator");
  Realization orig = field.realization;
  SpinorField g = with_realization(field, Realization::momentum);
  for (size_t p = 0; p < g.lat.points(); ++p) {
    Spinor4 s{g.at(p, 0), g.at(p, 1), g.at(p, 2), g.at(p, 3)};
    Spinor4 r = prop.mode_matrices[p].apply(s);
    for (int c = 0; c < 4; ++c) g.at(p, c) = r[c];
  }
  g.time = field.time + prop.dt;
  SpinorField out = (orig == Realization::momentum) ? g : to_position(g);
  out.time = g.time;
  out.picture = field.picture;
  return out;
}

// Evolves by total time t in a single exact step.
inline SpinorField evolve_to(const SpinorField& field, double t_total) {
  return step(field, build_propagator(field.lat, field.picture, t_total));
}

}  // namespace doublet
