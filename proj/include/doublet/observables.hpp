//==============================================================================
// observables.hpp
// Poincare generators on the lattice, quantum-mechanical means, the 10 main
// and 12 additional conservation laws, and numerical commutator suites.
//
// All operators are built from the physical components p^j = -i d/dx_j (as a
// spectral derivative), coordinate multiplication x^j, the energy symbol
// omega, and the constant spin matrices:
//   p0 = omega,  p_l = k_l,
//   j_ln = x_l p_n - x_n p_l + s_ln          (= m_ln + s_ln),
//   j_0l = t p_l - (1/2){x_l, omega} - breve_s_l,
//   breve_s_l = s_ln p_n / (omega + m),
//   m_0l = t p_l - (1/2){x_l, omega}.
// The commutation relations
//   [p_mu, p_nu] = 0,
//   [p_mu, j_rho_sigma] = i g_mu_rho p_sigma - i g_mu_sigma p_rho,
//   [j_mu_nu, j_rho_sigma] = -i (g_mu_rho j_nu_sigma + g_rho_nu j_sigma_mu
//                                + g_nu_sigma j_mu_rho + g_sigma_mu j_rho_nu)
// hold with the same numerical metric for raised or lowered indices.
//
// Dimension rule: orbital factors exist only for axes <= dim, and a spin pair
// s_ln enters the generator and observable tables only when both l,n <= dim.
// At dim = 3 this is the full table; below three dimensions it is the closed
// subalgebra the lattice can actually represent (transverse boosts with spin
// content do not close once the paired coordinate is gone).  Out-of-range
// entries act as zero so the full 10+12 label set stays addressable at any
// dimension.
//
// A generator set is tied to one realization: means and quadratures are
// evaluated there, with conjugate-variable operators reached through the
// transform pair.
//==============================================================================
#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "doublet/check.hpp"
#include "doublet/clifford.hpp"
#include "doublet/lattice.hpp"
#include "doublet/packets.hpp"
#include "doublet/states.hpp"

namespace doublet {

//------------------------------------------------------------------------------
// Generator identifiers
//------------------------------------------------------------------------------
struct GenId {
  enum class Kind { p, j, m_orb, spin, spin_breve };
  Kind kind = Kind::p;
  int a = 0;  // first index (mu, or l)
  int b = 0;  // second index (nu, or n); unused for p and spin_breve

  std::string name() const {
    switch (kind) {
      case Kind::p: return "P" + std::to_string(a);
      case Kind::j: return "J" + std::to_string(a) + std::to_string(b);
      case Kind::m_orb: return "M" + std::to_string(a) + std::to_string(b);
      case Kind::spin: return "S" + std::to_string(a) + std::to_string(b);
      default: return "SB" + std::to_string(a);
    }
  }
  bool time_dependent() const {
    return (kind == Kind::j || kind == Kind::m_orb) && a == 0;
  }
};

// Fixed audited order: 10 main then 12 additional quantities.
inline std::vector<GenId> main_quantities() {
  using K = GenId::Kind;
  return {{K::p, 0}, {K::p, 1}, {K::p, 2}, {K::p, 3},
          {K::j, 0, 1}, {K::j, 0, 2}, {K::j, 0, 3},
          {K::j, 1, 2}, {K::j, 1, 3}, {K::j, 2, 3}};
}
inline std::vector<GenId> additional_quantities() {
  using K = GenId::Kind;
  return {{K::m_orb, 0, 1}, {K::m_orb, 0, 2}, {K::m_orb, 0, 3},
          {K::m_orb, 1, 2}, {K::m_orb, 1, 3}, {K::m_orb, 2, 3},
          {K::spin, 1, 2}, {K::spin, 1, 3}, {K::spin, 2, 3},
          {K::spin_breve, 1}, {K::spin_breve, 2}, {K::spin_breve, 3}};
}
inline std::vector<GenId> audited_quantities() {
  auto q = main_quantities();
  auto extra = additional_quantities();
  q.insert(q.end(), extra.begin(), extra.end());
  return q;
}

//------------------------------------------------------------------------------
// GeneratorSet
//------------------------------------------------------------------------------
class GeneratorSet {
 public:
  static GeneratorSet make(const Lattice& lat, Realization realization) {
    lat.validate();
    GeneratorSet g;
    g.lat_ = lat;
    g.realization_ = realization;
    g.spin_ = build_spin_and_charge().spin;
    g.omega_ = omega_symbol(lat);
    double m = lat.mass;
    g.inv_omega_plus_m_ = make_symbol(lat, [m](const std::array<double, 3>& k) {
      return cd(1.0 / (std::sqrt(k[0] * k[0] + k[1] * k[1] + k[2] * k[2] + m * m) + m));
    });
    for (int l = 1; l <= lat.dim; ++l)
      g.ksym_[static_cast<size_t>(l - 1)] = momentum_component_symbol(lat, l);
    return g;
  }

  const Lattice& lattice() const { return lat_; }
  Realization realization() const { return realization_; }

  SpinorField to_native(const SpinorField& f) const {
    return with_realization(f, realization_);
  }

  // p^mu, mu = 0..3.
  SpinorField apply_p(int mu, const SpinorField& f) const {
    SpinorField g = to_native(f);
    if (mu == 0) return apply_symbol(g, omega_);
    if (mu < 0 || mu > 3) throw std::invalid_argument("momentum index out of range");
    if (mu > lat_.dim) return zero_like(g);
    return apply_symbol(g, ksym_[static_cast<size_t>(mu - 1)]);
  }

  // Coordinate multiplication x^l (l = 1..3), spectral in the conjugate
  // realization.
  SpinorField apply_x(int l, const SpinorField& f) const {
    SpinorField g = to_native(f);
    if (l < 1 || l > 3) throw std::invalid_argument("coordinate index out of range");
    if (l > lat_.dim) return zero_like(g);
    if (realization_ == Realization::position) return multiply_coord(g, l);
    return to_momentum(multiply_coord(to_position(g), l));
  }

  // j^{mu nu} for mu < nu; antisymmetric wrapper below.
  SpinorField apply_j(int mu, int nu, const SpinorField& f, double t) const {
    if (!(mu >= 0 && nu <= 3 && mu < nu))
      throw std::invalid_argument("apply_j expects 0 <= mu < nu <= 3");
    if (mu == 0) return boost(nu, f, t, true);
    SpinorField g = to_native(f);
    SpinorField orbital = apply_m(mu, nu, f, t);
    SpinorField spin_part = apply_spin(mu, nu, g);
    return add(orbital, spin_part);
  }

  SpinorField apply_j_signed(int mu, int nu, const SpinorField& f, double t) const {
    if (mu == nu) return zero_like(to_native(f));
    if (mu < nu) return apply_j(mu, nu, f, t);
    return scale(apply_j(nu, mu, f, t), cd(-1.0));
  }

  // Orbital part m^{mu nu} (mu < nu).
  SpinorField apply_m(int mu, int nu, const SpinorField& f, double t) const {
    if (!(mu >= 0 && nu <= 3 && mu < nu))
      throw std::invalid_argument("apply_m expects 0 <= mu < nu <= 3");
    if (mu == 0) return boost(nu, f, t, false);
    SpinorField g = to_native(f);
    SpinorField xl_pn = apply_x(mu, apply_p(nu, g));
    SpinorField xn_pl = apply_x(nu, apply_p(mu, g));
    return sub(xl_pn, xn_pl);
  }

  // Spin tensor s_{ln} as a constant matrix; in range only when both l,n <= dim.
  SpinorField apply_spin(int l, int n, const SpinorField& f) const {
    SpinorField g = to_native(f);
    if (l > lat_.dim || n > lat_.dim) return zero_like(g);
    return apply_matrix(g, spin_.tensor(l, n));
  }

  // breve_s_l = s_{ln} p_n / (omega + m), same in-range rule per spin pair.
  SpinorField apply_spin_breve(int l, const SpinorField& f) const {
    SpinorField g = to_native(f);
    SpinorField acc = zero_like(g);
    if (l > lat_.dim) return acc;
    for (int n = 1; n <= lat_.dim; ++n) {
      if (n == l) continue;
      SpinorField kn = apply_symbol(apply_symbol(g, ksym_[static_cast<size_t>(n - 1)]),
                                    inv_omega_plus_m_);
      acc = add(acc, apply_matrix(kn, spin_.tensor(l, n)));
    }
    return acc;
  }

  SpinorField apply(const GenId& id, const SpinorField& f, double t) const {
    switch (id.kind) {
      case GenId::Kind::p: return apply_p(id.a, f);
      case GenId::Kind::j: return apply_j(id.a, id.b, f, t);
      case GenId::Kind::m_orb: return apply_m(id.a, id.b, f, t);
      case GenId::Kind::spin: return apply_spin(id.a, id.b, f);
      default: return apply_spin_breve(id.a, f);
    }
  }

 private:
  SpinorField zero_like(const SpinorField& f) const {
    return SpinorField::zero(f.lat, f.realization, f.picture, f.time);
  }

  SpinorField multiply_coord(const SpinorField& f, int l) const {
    SpinorField g = f;
    for (size_t p = 0; p < lat_.points(); ++p) {
      double x = lat_.position(p)[static_cast<size_t>(l - 1)];
      for (int c = 0; c < 4; ++c) g.at(p, c) *= x;
    }
    return g;
  }

  // t p_l - (1/2){x_l, omega} [- breve_s_l]
  SpinorField boost(int l, const SpinorField& f, double t, bool with_spin) const {
    SpinorField g = to_native(f);
    if (l > lat_.dim) return zero_like(g);
    SpinorField wf = apply_symbol(g, omega_);
    SpinorField sym = add(apply_x(l, wf), apply_symbol(apply_x(l, g), omega_));
    SpinorField out = scale(sym, cd(-0.5));
    if (t != 0.0) out = add(out, scale(apply_p(l, g), cd(t)));
    if (with_spin) out = sub(out, apply_spin_breve(l, g));
    return out;
  }

  Lattice lat_;
  Realization realization_ = Realization::position;
  SpinTriple spin_;
  ScalarSymbol omega_;
  ScalarSymbol inv_omega_plus_m_;
  std::array<ScalarSymbol, 3> ksym_;
};

//------------------------------------------------------------------------------
// Quantum-mechanical means
//------------------------------------------------------------------------------
inline cd mean(const GeneratorSet& gens, const GenId& id, const SpinorField& field,
               double t, bool require_normalized = true) {
  SpinorField f = gens.to_native(field);
  if (require_normalized) {
    double n = norm(f);
    if (std::abs(n - 1.0) > 1e-9)
      throw std::invalid_argument(
          "mean expects a normalized field (pass require_normalized=false to override)");
  }
  return inner(f, gens.apply(id, f, t));
}

// Charge-sign / spin-matrix means for constant matrices.
inline cd matrix_mean(const SpinorField& field, const Mat4& m) {
  return inner(field, apply_matrix(field, m));
}

//------------------------------------------------------------------------------
// Conservation audit
//------------------------------------------------------------------------------
struct AuditOptions {
  Realization realization = Realization::position;
  double tolerance = 1e-8;
  // Disabling the explicit t p_l term in the boosts is a negative control:
  // with it gone the boost means must drift by about <p_l> per unit time.
  bool boost_time_term = true;
};

struct ConservationReport {
  std::vector<std::string> names;
  std::vector<double> times;
  std::vector<std::vector<cd>> values;  // [quantity][time]
  std::vector<double> drifts;           // [quantity]
  std::vector<double> max_imag;         // [quantity]
  std::vector<bool> verdicts;           // [quantity]
  double tolerance = 1e-8;

  bool all_pass() const {
    for (bool v : verdicts)
      if (!v) return false;
    return true;
  }
};

inline ConservationReport audit_conservation(const AmplitudeSet& amps,
                                             const std::vector<double>& times,
                                             const AuditOptions& opts = {}) {
  if (times.size() < 3)
    throw std::invalid_argument("conservation audit needs at least 3 distinct times");
  AmplitudeSet unit = normalized(amps);
  if (nyquist_tail_fraction(unit) > kTailLimit)
    throw std::invalid_argument("conservation audit: spectral mass too close to Nyquist");

  GeneratorSet gens = GeneratorSet::make(amps.lat, opts.realization);
  auto ids = audited_quantities();

  ConservationReport rep;
  rep.tolerance = opts.tolerance;
  rep.times = times;
  rep.names.reserve(ids.size());
  for (const auto& id : ids) rep.names.push_back(id.name());
  rep.values.assign(ids.size(), {});

  for (double t : times) {
    SpinorField f = synthesize_sf(unit, t);
    if (edge_tail_fraction(f) > kTailLimit)
      throw std::invalid_argument("conservation audit: packet touches the box boundary");
    for (size_t q = 0; q < ids.size(); ++q) {
      double t_gen = (opts.boost_time_term || !ids[q].time_dependent()) ? t : 0.0;
      rep.values[q].push_back(mean(gens, ids[q], f, t_gen));
    }
  }

  for (size_t q = 0; q < ids.size(); ++q) {
    double drift = 0.0, scale_q = 1.0, imag = 0.0;
    for (const cd& v : rep.values[q]) {
      drift = std::max(drift, std::abs(v - rep.values[q][0]));
      scale_q = std::max(scale_q, std::abs(v));
      imag = std::max(imag, std::abs(v.imag()));
    }
    rep.drifts.push_back(drift);
    rep.max_imag.push_back(imag);
    rep.verdicts.push_back(drift <= opts.tolerance * scale_q);
  }
  return rep;
}

//------------------------------------------------------------------------------
// Amplitude-space means of the 10 main quantities, evaluated on the momentum
// grid with the coordinate acting spectrally.  Equals the position-space means
// of the synthesized solution at t = 0.
//------------------------------------------------------------------------------
inline std::vector<std::pair<std::string, cd>> amplitude_means(const AmplitudeSet& amps) {
  GeneratorSet gens = GeneratorSet::make(amps.lat, Realization::momentum);
  SpinorField a = amplitudes_as_field(amps);
  std::vector<std::pair<std::string, cd>> out;
  for (const auto& id : main_quantities())
    out.emplace_back(id.name(), inner(a, gens.apply(id, a, 0.0)));
  return out;
}

//------------------------------------------------------------------------------
// Poincare algebra suite: every unordered pair of the ten generators, both
// sides applied to random packets.
//------------------------------------------------------------------------------
namespace detail {

struct PLabel {
  bool is_p = true;
  int mu = 0, nu = 0;  // nu unused for p
  std::string name() const {
    if (is_p) return "P" + std::to_string(mu);
    return "J" + std::to_string(mu) + std::to_string(nu);
  }
};

inline std::vector<PLabel> poincare_labels() {
  std::vector<PLabel> v;
  for (int mu = 0; mu <= 3; ++mu) v.push_back({true, mu, 0});
  for (int mu = 0; mu <= 3; ++mu)
    for (int nu = mu + 1; nu <= 3; ++nu) v.push_back({false, mu, nu});
  return v;
}

inline SpinorField apply_label(const GeneratorSet& g, const PLabel& l,
                               const SpinorField& f, double t) {
  return l.is_p ? g.apply_p(l.mu, f) : g.apply_j(l.mu, l.nu, f, t);
}

// Right-hand side of the algebra for the pair (A, B).
inline SpinorField algebra_rhs(const GeneratorSet& g, const PLabel& A, const PLabel& B,
                               const SpinorField& f, double t) {
  const cd i(0.0, 1.0);
  SpinorField acc = SpinorField::zero(f.lat, f.realization, f.picture, f.time);
  if (A.is_p && B.is_p) return acc;  // [p, p] = 0
  if (A.is_p != B.is_p) {
    // [p_mu, j_rho_sigma] = i g_mu_rho p_sigma - i g_mu_sigma p_rho,
    // with an overall sign flip when the pair arrives as (j, p).
    const PLabel& P = A.is_p ? A : B;
    const PLabel& J = A.is_p ? B : A;
    cd sign = A.is_p ? cd(1.0) : cd(-1.0);
    double g1 = metric(P.mu, J.mu), g2 = metric(P.mu, J.nu);
    if (g1 != 0.0) acc = add(acc, scale(g.apply_p(J.nu, f), sign * i * g1));
    if (g2 != 0.0) acc = sub(acc, scale(g.apply_p(J.mu, f), sign * i * g2));
    return acc;
  }
  // [j_mu_nu, j_rho_sigma] = -i (g_mu_rho j_nu_sigma + g_rho_nu j_sigma_mu
  //                              + g_nu_sigma j_mu_rho + g_sigma_mu j_rho_nu)
  int mu = A.mu, nu = A.nu, rho = B.mu, sigma = B.nu;
  struct Term { int g1, g2, j1, j2; };
  const Term terms[4] = {{mu, rho, nu, sigma},
                         {rho, nu, sigma, mu},
                         {nu, sigma, mu, rho},
                         {sigma, mu, rho, nu}};
  for (const Term& tm : terms) {
    double gv = metric(tm.g1, tm.g2);
    if (gv == 0.0) continue;
    acc = add(acc, scale(g.apply_j_signed(tm.j1, tm.j2, f, t), -i * gv));
  }
  return acc;
}

}  // namespace detail

// One CheckResult per relation; the residual is the maximum over trials of
// ||[A,B]f - rhs f|| / max(1, ||[A,B]f||, ||rhs f||).
inline std::vector<CheckResult> check_poincare_algebra(
    const Lattice& lat, int n_trials, std::uint64_t seed, double t = 0.0,
    Realization realization = Realization::position, double tolerance = 1e-6) {
  if (n_trials < 1) throw std::invalid_argument("need at least one trial packet");
  GeneratorSet gens = GeneratorSet::make(lat, realization);
  auto labels = detail::poincare_labels();

  std::vector<SpinorField> packets;
  for (int i = 0; i < n_trials; ++i)
    packets.push_back(gens.to_native(random_packet(lat, seed + static_cast<std::uint64_t>(i), t)));

  std::vector<CheckResult> out;
  for (size_t a = 0; a < labels.size(); ++a) {
    for (size_t b = a + 1; b < labels.size(); ++b) {
      double worst = 0.0;
      for (const SpinorField& f : packets) {
        SpinorField ab = detail::apply_label(gens, labels[a],
                                             detail::apply_label(gens, labels[b], f, t), t);
        SpinorField ba = detail::apply_label(gens, labels[b],
                                             detail::apply_label(gens, labels[a], f, t), t);
        SpinorField lhs = sub(ab, ba);
        SpinorField rhs = detail::algebra_rhs(gens, labels[a], labels[b], f, t);
        double denom = std::max({1.0, norm(lhs), norm(rhs)});
        worst = std::max(worst, distance(lhs, rhs) / denom);
      }
      out.push_back(make_check("[" + labels[a].name() + "," + labels[b].name() + "]",
                               worst, tolerance));
    }
  }
  return out;
}

//------------------------------------------------------------------------------
// Symmetry suite: every generator commutes with the equation operator.  For
// time-independent generators that is [G, omega] = 0; boosts carry the
// explicit t-term and satisfy [j_0l, omega] + i p_l = 0 (Heisenberg
// constancy).
//------------------------------------------------------------------------------
inline std::vector<CheckResult> check_symmetry_commutators(
    const Lattice& lat, int n_trials, std::uint64_t seed, double t = 0.0,
    Realization realization = Realization::position, double tolerance = 1e-6) {
  if (n_trials < 1) throw std::invalid_argument("need at least one trial packet");
  GeneratorSet gens = GeneratorSet::make(lat, realization);
  const cd i(0.0, 1.0);

  std::vector<SpinorField> packets;
  for (int k = 0; k < n_trials; ++k)
    packets.push_back(gens.to_native(random_packet(lat, seed + static_cast<std::uint64_t>(k), t)));

  std::vector<CheckResult> out;
  for (const GenId& id : audited_quantities()) {
    double worst = 0.0;
    for (const SpinorField& f : packets) {
      SpinorField wf = apply_omega(f);
      SpinorField comm = sub(gens.apply(id, wf, t), apply_omega(gens.apply(id, f, t)));
      if (id.time_dependent()) {
        // d/dt of the generator is p_l for both j_0l and m_0l.
        comm = add(comm, scale(gens.apply_p(id.b, f), i));
      }
      worst = std::max(worst, norm(comm) / norm(f));
    }
    out.push_back(make_check("[" + id.name() + ",H]", worst, tolerance));
  }
  return out;
}

}  // namespace doublet
