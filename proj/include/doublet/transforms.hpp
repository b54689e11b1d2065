//==============================================================================
// transforms.hpp
// The three inter-picture maps and their operator identities:
//   v          sf <-> fw, pointwise in position space: conjugate the two lower
//              components (involutive, antilinear on the lower block).
//   V+/V-      fw <-> dirac, per momentum mode:
//              V+-(k) = (-+ gamma.k + w + m) / sqrt(2 w (w+m)),
//              V+ V- = I, each unitary, V+ (g0 w) V- = alpha.k + beta m.
//   W = V+ v   sf -> dirac directly; W^{-1} = v V-.
//
// v is implemented only in the position realization, where it is local;
// composite maps convert internally.  Note W is NOT a per-mode matrix map:
// the conjugation in v couples the k and -k content of the lower block.
//==============================================================================
#pragma once

#include <cmath>
#include <functional>
#include <stdexcept>
#include <vector>

#include "doublet/clifford.hpp"
#include "doublet/evolve.hpp"
#include "doublet/lattice.hpp"

namespace doublet {

namespace detail {

// Pointwise conjugation of components 2,3 without any picture bookkeeping.
inline SpinorField conj_lower(const SpinorField& f) {
  SpinorField g = f;
  for (size_t p = 0; p < f.lat.points(); ++p) {
    g.at(p, 2) = std::conj(g.at(p, 2));
    g.at(p, 3) = std::conj(g.at(p, 3));
  }
  return g;
}

}  // namespace detail

//------------------------------------------------------------------------------
// v: conjugate the positron components pointwise.  Maps sf solutions to fw
// solutions and back.
//------------------------------------------------------------------------------
inline SpinorField apply_v(const SpinorField& f) {
  f.check_shape();
  if (f.realization != Realization::position)
    throw std::invalid_argument("apply_v expects a position-realization field");
  if (f.picture == Picture::dirac)
    throw std::invalid_argument("apply_v links the sf and fw pictures only");
  SpinorField g = detail::conj_lower(f);
  g.picture = (f.picture == Picture::sf) ? Picture::fw : Picture::sf;
  return g;
}

//------------------------------------------------------------------------------
// Sandwich q -> v q v acting on position-realization field maps.  Valid as an
// operator transport only for anti-Hermitian (prime-form) operators, i.e.
// maps of the form f -> i H f; callers must pass those.
//------------------------------------------------------------------------------
using FieldMap = std::function<SpinorField(const SpinorField&)>;

inline FieldMap conjugate_sandwich(FieldMap op) {
  return [op = std::move(op)](const SpinorField& f) {
    return detail::conj_lower(op(detail::conj_lower(f)));
  };
}

//------------------------------------------------------------------------------
// FW transform kernels per momentum mode.
//------------------------------------------------------------------------------
struct FWKernel {
  Lattice lat;
  std::vector<Mat4> plus_matrices;
  std::vector<Mat4> minus_matrices;
};

inline FWKernel build_fw_kernel(const Lattice& lat) {
  lat.validate();
  auto g = build_gamma_pd();
  FWKernel ker;
  ker.lat = lat;
  ker.plus_matrices.resize(lat.points());
  ker.minus_matrices.resize(lat.points());
  for (size_t p = 0; p < lat.points(); ++p) {
    auto k = lat.wavevector(p);
    double w = lat.omega(p);
    double denom = std::sqrt(2.0 * w * (w + lat.mass));  // >= 2m > 0
    Mat4 gk = Mat4::zero();
    for (int a = 0; a < lat.dim; ++a)
      gk = gk + cd(k[static_cast<size_t>(a)]) * g[static_cast<size_t>(a) + 1];
    Mat4 base = cd(w + lat.mass) * Mat4::identity();
    ker.plus_matrices[p] = cd(1.0 / denom) * (base - gk);
    ker.minus_matrices[p] = cd(1.0 / denom) * (base + gk);
  }
  return ker;
}

enum class KernelSign { plus, minus };

// Per-mode application of V+ or V-; result keeps the caller's realization.
inline SpinorField apply_fw_kernel(const SpinorField& f, const FWKernel& ker,
                                   KernelSign sign) {
  f.check_shape();
  if (f.lat != ker.lat) throw std::invalid_argument("kernel built for a different lattice");
  Realization orig = f.realization;
  SpinorField g = with_realization(f, Realization::momentum);
  const auto& mats =
      (sign == KernelSign::plus) ? ker.plus_matrices : ker.minus_matrices;
  for (size_t p = 0; p < g.lat.points(); ++p) {
    Spinor4 s{g.at(p, 0), g.at(p, 1), g.at(p, 2), g.at(p, 3)};
    Spinor4 r = mats[p].apply(s);
    for (int c = 0; c < 4; ++c) g.at(p, c) = r[c];
  }
  return orig == Realization::momentum ? g : to_position(g);
}

//------------------------------------------------------------------------------
// W: forward = V+ after v (sf -> dirac); inverse = v after V- (dirac -> sf).
//------------------------------------------------------------------------------
enum class WDirection { forward, inverse };

inline SpinorField apply_w(const SpinorField& f, const FWKernel& ker, WDirection dir) {
  f.check_shape();
  if (f.lat != ker.lat) throw std::invalid_argument("kernel built for a different lattice");
  Realization orig = f.realization;
  SpinorField out;
  if (dir == WDirection::forward) {
    if (f.picture != Picture::sf)
      throw std::invalid_argument("apply_w forward expects an sf-picture field");
    SpinorField x = detail::conj_lower(with_realization(f, Realization::position));
    out = apply_fw_kernel(to_momentum(x), ker, KernelSign::plus);
    out.picture = Picture::dirac;
  } else {
    if (f.picture != Picture::dirac)
      throw std::invalid_argument("apply_w inverse expects a dirac-picture field");
    SpinorField x = apply_fw_kernel(with_realization(f, Realization::momentum), ker,
                                    KernelSign::minus);
    out = detail::conj_lower(to_position(x));
    out.picture = Picture::sf;
  }
  return with_realization(out, orig);
}

inline SpinorField apply_w(const SpinorField& f, WDirection dir) {
  return apply_w(f, build_fw_kernel(f.lat), dir);
}

//------------------------------------------------------------------------------
// Intertwining residuals: evolve in the source picture then transform, versus
// transform first then evolve in the target picture.  Both paths must agree
// for every solution.
//------------------------------------------------------------------------------
enum class PicturePair { sf_fw_via_v, sf_dirac_via_w, dirac_sf_via_w_inverse };

inline const char* to_string(PicturePair p) {
  switch (p) {
    case PicturePair::sf_fw_via_v: return "sf->fw via v";
    case PicturePair::sf_dirac_via_w: return "sf->dirac via W";
    default: return "dirac->sf via W^{-1}";
  }
}

// f must be a solution snapshot in the pair's source picture.
inline double intertwining_residual(const SpinorField& f, PicturePair pair, double t) {
  const Lattice& lat = f.lat;
  FWKernel ker = build_fw_kernel(lat);
  auto transform = [&](const SpinorField& u) {
    switch (pair) {
      case PicturePair::sf_fw_via_v: return apply_v(with_realization(u, Realization::position));
      case PicturePair::sf_dirac_via_w: return apply_w(u, ker, WDirection::forward);
      default: return apply_w(u, ker, WDirection::inverse);
    }
  };
  SpinorField evolved_then_mapped = transform(evolve_to(f, t));
  SpinorField mapped = transform(f);
  SpinorField mapped_then_evolved = evolve_to(mapped, t);
  SpinorField a = with_realization(evolved_then_mapped, Realization::position);
  SpinorField b = with_realization(mapped_then_evolved, Realization::position);
  double nf = norm(f);
  if (nf == 0.0) throw std::invalid_argument("intertwining residual of a zero field");
  return distance(a, b) / nf;
}

}  // namespace doublet
