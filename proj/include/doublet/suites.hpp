//==============================================================================
// suites.hpp
// The named verification suites behind both the CLI and the acceptance tests.
// Each suite produces a flat list of named checks with residuals and pinned
// tolerances; exact matrix identities carry tolerance 0.
//==============================================================================
#pragma once

#include <cstring>
#include <optional>
#include <string>
#include <vector>

#include "doublet/config.hpp"
#include "doublet/evolve.hpp"
#include "doublet/observables.hpp"
#include "doublet/packets.hpp"
#include "doublet/serialize.hpp"
#include "doublet/transforms.hpp"

namespace doublet {

//------------------------------------------------------------------------------
// algebra: exact finite-dimensional identities, no lattice involved.
//------------------------------------------------------------------------------
inline SuiteResult run_algebra_suite() {
  SuiteResult suite{"algebra", {}};
  auto& checks = suite.checks;
  auto g = build_gamma_pd();
  auto gb = build_gamma_bar();
  auto basis = real_basis_spinors();

  // {gamma^mu, gamma^nu} = 2 g^{mu nu} I, Pauli-Dirac representation.
  {
    double worst = 0.0;
    for (int mu = 0; mu <= 3; ++mu)
      for (int nu = mu; nu <= 3; ++nu) {
        Mat4 anti = g[static_cast<size_t>(mu)] * g[static_cast<size_t>(nu)] +
                    g[static_cast<size_t>(nu)] * g[static_cast<size_t>(mu)];
        Mat4 expect = cd(2.0 * metric(mu, nu)) * Mat4::identity();
        worst = std::max(worst, max_abs_diff(anti, expect));
      }
    checks.push_back(make_check("pd_anticommutators", worst, 0.0));
  }

  // Same relations for the conjugation-twisted representation, as operator
  // identities on the 8 real basis spinors.
  {
    double worst = 0.0;
    for (int mu = 0; mu <= 3; ++mu)
      for (int nu = mu; nu <= 3; ++nu)
        for (const auto& s : basis) {
          Spinor4 lhs = gb[static_cast<size_t>(mu)].apply(gb[static_cast<size_t>(nu)].apply(s));
          Spinor4 rhs = gb[static_cast<size_t>(nu)].apply(gb[static_cast<size_t>(mu)].apply(s));
          Spinor4 sum;
          Spinor4 expect;
          for (int i = 0; i < 4; ++i) {
            sum[i] = lhs[i] + rhs[i];
            expect[i] = cd(2.0 * metric(mu, nu)) * s[static_cast<size_t>(i)];
          }
          worst = std::max(worst, max_abs_diff(sum, expect));
        }
    checks.push_back(make_check("bar_anticommutators", worst, 0.0));
  }

  // Inverses: bar0^{-1} = bar0 and barl^{-1} = -barl, by composition to the
  // identity operation.
  {
    double worst = 0.0;
    auto id = ConjugatingMatrixOp::identity_op();
    for (int mu = 0; mu <= 3; ++mu) {
      ConjugatingMatrixOp candidate = gb[static_cast<size_t>(mu)];
      if (mu != 0) candidate.mat = -candidate.mat;
      ConjugatingMatrixOp prod = compose_strict(gb[static_cast<size_t>(mu)], candidate);
      for (const auto& s : basis)
        worst = std::max(worst, max_abs_diff(prod.apply(s), id.apply(s)));
    }
    checks.push_back(make_check("bar_inverses", worst, 0.0));
  }

  auto sc = build_spin_and_charge();

  // SU(2): [s^j, s^l] = i eps_{jln} s^n, plus [s^j, g] = 0 and s.s = (3/4) I.
  {
    double worst = 0.0;
    const Mat4* s = sc.spin.s.data();
    const int eps[3][3] = {{0, 3, -2}, {-3, 0, 1}, {2, -1, 0}};  // eps[j][l] -> signed n+1
    for (int j = 0; j < 3; ++j)
      for (int l = 0; l < 3; ++l) {
        Mat4 comm = s[j] * s[l] - s[l] * s[j];
        Mat4 expect = Mat4::zero();
        if (eps[j][l] != 0) {
          int n = std::abs(eps[j][l]) - 1;
          expect = cd(0.0, eps[j][l] > 0 ? 1.0 : -1.0) * s[n];
        }
        worst = std::max(worst, max_abs_diff(comm, expect));
      }
    for (int j = 0; j < 3; ++j)
      worst = std::max(worst,
                       max_abs_diff(s[j] * sc.charge_sign, sc.charge_sign * s[j]));
    Mat4 s2 = s[0] * s[0] + s[1] * s[1] + s[2] * s[2];
    worst = std::max(worst, max_abs_diff(s2, cd(0.75) * Mat4::identity()));
    checks.push_back(make_check("su2_spin_algebra", worst, 0.0));
  }

  // Eigenvalue table on the basis orts: s3 = diag(1/2,-1/2,-1/2,1/2),
  // g = diag(-1,-1,1,1).
  {
    double worst = 0.0;
    const double s3_expect[4] = {0.5, -0.5, -0.5, 0.5};
    const double g_expect[4] = {-1.0, -1.0, 1.0, 1.0};
    for (int a = 0; a < 4; ++a) {
      Spinor4 d{};
      d[a] = 1.0;
      Spinor4 s3d = sc.spin.s[2].apply(d);
      Spinor4 gd = sc.charge_sign.apply(d);
      for (int i = 0; i < 4; ++i) {
        cd s3_want = (i == a) ? cd(s3_expect[a]) : cd(0.0);
        cd g_want = (i == a) ? cd(g_expect[a]) : cd(0.0);
        worst = std::max({worst, std::abs(s3d[i] - s3_want), std::abs(gd[i] - g_want)});
      }
    }
    checks.push_back(make_check("spin_charge_eigenvalues", worst, 0.0));
  }

  // Spin from the gamma-bar pair products equals the block form entry-wise,
  // and each pair product is linear (the two conjugations cancel).
  {
    SpinTriple from_bar = spin_from_gamma_bar();
    double worst = 0.0;
    for (int j = 0; j < 3; ++j)
      worst = std::max(worst, max_abs_diff(from_bar.s[static_cast<size_t>(j)],
                                           sc.spin.s[static_cast<size_t>(j)]));
    checks.push_back(make_check("bar_product_spin_identity", worst, 0.0));
  }

  // v is an involution.
  {
    ConjugatingMatrixOp vv = compose_strict(v_op(), v_op());
    double worst = 0.0;
    for (const auto& s : basis)
      worst = std::max(worst, max_abs_diff(vv.apply(s), s));
    checks.push_back(make_check("v_involution", worst, 0.0));
  }

  // gamma-bar representation really is v gamma v.
  {
    double worst = 0.0;
    for (int mu = 0; mu <= 3; ++mu) {
      ConjugatingMatrixOp sandwich = compose_strict(
          compose_strict(v_op(), ConjugatingMatrixOp::linear_op(g[static_cast<size_t>(mu)])),
          v_op());
      for (const auto& s : basis)
        worst = std::max(worst,
                         max_abs_diff(sandwich.apply(s), gb[static_cast<size_t>(mu)].apply(s)));
    }
    checks.push_back(make_check("bar_equals_v_gamma_v", worst, 0.0));
  }

  return suite;
}

//------------------------------------------------------------------------------
// transforms: solution maps, kernels and intertwining.
//------------------------------------------------------------------------------
inline SuiteResult run_transforms_suite(const Lattice& lat, std::uint64_t seed,
                                        int trials = 10) {
  SuiteResult suite{"transforms", {}};
  auto& checks = suite.checks;
  DeterministicRng rng(seed);
  PacketSpec spec = default_packet_spec(lat);
  FWKernel ker = build_fw_kernel(lat);

  // v maps canonical solutions onto diagonalized ones, pointwise.
  {
    double worst = 0.0;
    for (int i = 0; i < trials; ++i) {
      AmplitudeSet amps = random_amplitudes(lat, rng, spec);
      double t = rng.uniform(0.0, 2.0 / lat.mass);
      SpinorField sf = synthesize_sf(amps, t);
      SpinorField fw = synthesize_fw(amps, t);
      worst = std::max(worst, distance(apply_v(sf), fw) / norm(fw));
    }
    checks.push_back(make_check("v_solution_map", worst, 1e-12));
  }

  // V+- are unitary and mutually inverse on every grid mode.
  {
    double worst_u = 0.0, worst_inv = 0.0;
    for (size_t p = 0; p < lat.points(); ++p) {
      const Mat4& vp = ker.plus_matrices[p];
      const Mat4& vm = ker.minus_matrices[p];
      worst_u = std::max(worst_u,
                         max_abs_diff(vp.adjoint() * vp, Mat4::identity()));
      worst_u = std::max(worst_u,
                         max_abs_diff(vm.adjoint() * vm, Mat4::identity()));
      worst_inv = std::max(worst_inv, max_abs_diff(vp * vm, Mat4::identity()));
    }
    checks.push_back(make_check("fw_kernel_unitary", worst_u, 1e-12));
    checks.push_back(make_check("fw_kernel_inverse", worst_inv, 1e-12));
  }

  // Per-mode diagonalization identity V+ (g0 w) V- = alpha.k + beta m on 100
  // random grid modes.
  {
    double worst = 0.0;
    Mat4 g0w_base = gamma0();
    for (int i = 0; i < 100; ++i) {
      size_t p = static_cast<size_t>(rng.uniform() * static_cast<double>(lat.points()));
      p = std::min(p, lat.points() - 1);
      double w = lat.omega(p);
      Mat4 lhs = ker.plus_matrices[p] * (cd(w) * g0w_base) * ker.minus_matrices[p];
      Mat4 rhs = dirac_hamiltonian(lat, lat.wavevector(p));
      worst = std::max(worst, max_abs_diff(lhs, rhs));
    }
    checks.push_back(make_check("fw_dirac_per_mode", worst, 1e-12));
  }

  // W round trip and norm preservation.
  {
    double worst_rt = 0.0, worst_norm = 0.0;
    for (int i = 0; i < trials; ++i) {
      SpinorField f = synthesize_sf(random_amplitudes(lat, rng, spec), 0.0);
      SpinorField psi = apply_w(f, ker, WDirection::forward);
      worst_norm = std::max(worst_norm, std::abs(norm(psi) - norm(f)));
      SpinorField back = apply_w(psi, ker, WDirection::inverse);
      worst_rt = std::max(worst_rt, distance(back, f) / norm(f));
    }
    checks.push_back(make_check("w_round_trip", worst_rt, 1e-12));
    checks.push_back(make_check("w_norm_preserving", worst_norm, 1e-12));
  }

  // Guard: W is not a per-mode matrix map.  Conjugating the lower components
  // inside momentum space (instead of in position space) must visibly differ
  // on a generic packet; the check fails if the naive shortcut gets close.
  {
    SpinorField f = synthesize_sf(random_amplitudes(lat, rng, spec), 0.0);
    SpinorField g = to_momentum(f);
    for (size_t p = 0; p < lat.points(); ++p) {
      Spinor4 s{g.at(p, 0), g.at(p, 1), std::conj(g.at(p, 2)), std::conj(g.at(p, 3))};
      Spinor4 r = ker.plus_matrices[p].apply(s);
      for (int c = 0; c < 4; ++c) g.at(p, c) = r[c];
    }
    SpinorField naive = to_position(g);
    naive.picture = Picture::dirac;
    SpinorField truth = apply_w(f, ker, WDirection::forward);
    double diff = distance(naive, truth) / norm(f);
    const double floor = 1e-3;
    checks.push_back(make_check("w_naive_per_mode_differs",
                                diff >= floor ? 0.0 : floor - diff, 0.0));
  }

  // Evolve-then-map equals map-then-evolve for all three picture pairs.
  {
    const PicturePair pairs[3] = {PicturePair::sf_fw_via_v, PicturePair::sf_dirac_via_w,
                                  PicturePair::dirac_sf_via_w_inverse};
    for (PicturePair pair : pairs) {
      double worst = 0.0;
      for (int i = 0; i < trials; ++i) {
        SpinorField f = synthesize_sf(random_amplitudes(lat, rng, spec), 0.0);
        if (pair == PicturePair::dirac_sf_via_w_inverse)
          f = apply_w(f, ker, WDirection::forward);
        worst = std::max(worst, intertwining_residual(f, pair, 1.0 / lat.mass));
      }
      checks.push_back(make_check(std::string("intertwine ") + to_string(pair), worst, 1e-10));
    }
  }

  return suite;
}

//------------------------------------------------------------------------------
// poincare: commutator closure plus commutation with the equation operator.
//------------------------------------------------------------------------------
inline SuiteResult run_poincare_suite(const Lattice& lat, std::uint64_t seed,
                                      int trials = 5, double t = 0.0) {
  SuiteResult suite{"poincare", {}};
  suite.checks = check_poincare_algebra(lat, trials, seed, t);
  auto sym = check_symmetry_commutators(lat, trials, seed + 1000, t);
  suite.checks.insert(suite.checks.end(), sym.begin(), sym.end());
  return suite;
}

//------------------------------------------------------------------------------
// conservation: constancy of the 22 audited means plus the position-space vs
// amplitude-space agreement of the main ten at t = 0.
//------------------------------------------------------------------------------
inline SuiteResult run_conservation_suite(const AmplitudeSet& amps,
                                          const std::vector<double>& times,
                                          ConservationReport* report_out = nullptr) {
  SuiteResult suite{"conservation", {}};
  ConservationReport rep = audit_conservation(amps, times);
  for (size_t q = 0; q < rep.names.size(); ++q) {
    double scale_q = 1.0;
    for (const cd& v : rep.values[q]) scale_q = std::max(scale_q, std::abs(v));
    suite.checks.push_back(
        make_check("drift " + rep.names[q], rep.drifts[q] / scale_q, rep.tolerance));
  }
  for (size_t q = 0; q < rep.names.size(); ++q)
    suite.checks.push_back(make_check("imag " + rep.names[q], rep.max_imag[q], 1e-8));

  // Cross-form agreement at t = 0.
  GeneratorSet xgens = GeneratorSet::make(amps.lat, Realization::position);
  AmplitudeSet unit = normalized(amps);
  SpinorField f0 = synthesize_sf(unit, 0.0);
  auto amp_means = amplitude_means(unit);
  auto ids = main_quantities();
  for (size_t q = 0; q < ids.size(); ++q) {
    cd pos = mean(xgens, ids[q], f0, 0.0);
    cd amp = amp_means[q].second;
    double denom = std::max({1.0, std::abs(pos), std::abs(amp)});
    suite.checks.push_back(
        make_check("crossform " + ids[q].name(), std::abs(pos - amp) / denom, 1e-8));
  }

  if (report_out != nullptr) *report_out = rep;
  return suite;
}

//------------------------------------------------------------------------------
// frequency: sign-of-frequency content of the two pictures' solutions.
//------------------------------------------------------------------------------
inline SuiteResult run_frequency_suite(const Lattice& lat, std::uint64_t seed) {
  SuiteResult suite{"frequency", {}};
  DeterministicRng rng(seed);
  PacketSpec spec = default_packet_spec(lat);
  double dt = 0.37 / lat.mass;

  // Canonical solutions are purely positive-frequency.
  {
    AmplitudeSet amps = random_amplitudes(lat, rng, spec);
    FrequencyContent fc = frequency_split(synthesize_sf(amps, 0.0), synthesize_sf(amps, dt));
    suite.checks.push_back(make_check("sf_negative_content", fc.negative_sq, 1e-10));
  }

  // Diagonalized solutions carry the positron amplitudes on the negative
  // branch, with exactly the injected norm.
  {
    AmplitudeSet amps = random_amplitudes(lat, rng, spec, {false, false, true, true});
    double injected = squared_amplitude_norm(amps);
    FrequencyContent fc = frequency_split(synthesize_fw(amps, 0.0), synthesize_fw(amps, dt));
    suite.checks.push_back(make_check("fw_positron_positive_content", fc.positive_sq, 1e-10));
    suite.checks.push_back(
        make_check("fw_negative_matches_injected", std::abs(fc.negative_sq - injected), 1e-10));
  }

  // Equal electron/positron single bins split 50/50.
  {
    AmplitudeSet amps = AmplitudeSet::zero(lat);
    AmplitudeSet e = single_bin_amplitudes(lat, 0, {1, 0, 0});
    AmplitudeSet p = single_bin_amplitudes(lat, 3, {1, 0, 0});
    for (size_t q = 0; q < lat.points(); ++q) {
      amps.a[0][q] = e.a[0][q];
      amps.a[3][q] = p.a[3][q];
    }
    amps = normalized(amps);
    FrequencyContent fc = frequency_split(synthesize_fw(amps, 0.0), synthesize_fw(amps, dt));
    double worst = std::max(std::abs(fc.positive_sq - 0.5), std::abs(fc.negative_sq - 0.5));
    suite.checks.push_back(make_check("fw_even_split", worst, 1e-10));
  }

  return suite;
}

//------------------------------------------------------------------------------
// roundtrip: transform, analysis, serialization and propagator sanity.
//------------------------------------------------------------------------------
inline SuiteResult run_roundtrip_suite(const Lattice& lat, const AmplitudeSet& amps,
                                       std::uint64_t seed) {
  SuiteResult suite{"roundtrip", {}};
  auto& checks = suite.checks;
  DeterministicRng rng(seed);
  AmplitudeSet unit = normalized(amps);
  SpinorField f = synthesize_sf(unit, 0.0);

  // Fourier round trip and Plancherel.
  {
    SpinorField back = to_position(to_momentum(f));
    checks.push_back(make_check("fourier_round_trip", distance(back, f) / norm(f), 1e-12));
    double rel = std::abs(squared_norm(to_momentum(f)) - squared_norm(f)) / squared_norm(f);
    checks.push_back(make_check("plancherel", rel, 1e-12));
    double amp_rel =
        std::abs(squared_amplitude_norm(unit) - squared_norm(f)) / squared_norm(f);
    checks.push_back(make_check("amplitude_norm_matches_field", amp_rel, 1e-12));
  }

  // Synthesis/analysis round trip at a random time.
  {
    double t = rng.uniform(0.0, 2.0 / lat.mass);
    SpinorField ft = synthesize_sf(unit, t);
    SpinorField back = synthesize_sf(analyze_sf(ft, t), t);
    checks.push_back(make_check("analyze_synthesize_round_trip",
                                distance(back, ft) / norm(ft), 1e-12));
  }

  // Snapshot serialization reproduces every byte of the payload.
  {
    ordered_json j = ordered_json::parse(field_to_json(f).dump());
    SpinorField back = field_from_json(j);
    bool same = back.lat == f.lat && back.realization == f.realization &&
                back.picture == f.picture && back.time == f.time &&
                back.data.size() == f.data.size() &&
                std::memcmp(back.data.data(), f.data.data(),
                            f.data.size() * sizeof(cd)) == 0;
    checks.push_back(make_check("snapshot_bit_exact", same ? 0.0 : 1.0, 0.0));
  }

  // Propagators: group law, reversibility, unitarity, norm and equation
  // residuals of synthesized solutions.
  {
    double dt = 0.1 / lat.mass;
    const Picture pics[3] = {Picture::sf, Picture::fw, Picture::dirac};
    double worst_group = 0.0, worst_rev = 0.0, worst_unitary = 0.0, worst_norm = 0.0;
    for (Picture pic : pics) {
      Propagator full = build_propagator(lat, pic, dt);
      Propagator half = build_propagator(lat, pic, dt / 2.0);
      Propagator back = build_propagator(lat, pic, -dt);
      for (const Mat4& u : full.mode_matrices)
        worst_unitary = std::max(worst_unitary,
                                 max_abs_diff(u.adjoint() * u, Mat4::identity()));
      SpinorField start = f;
      start.picture = pic;
      SpinorField one = step(start, full);
      SpinorField two = step(step(start, half), half);
      worst_group = std::max(worst_group, distance(one, two) / norm(start));
      worst_rev = std::max(worst_rev, distance(step(one, back), start) / norm(start));
      worst_norm = std::max(worst_norm, std::abs(norm(one) - norm(start)));
    }
    checks.push_back(make_check("propagator_group_law", worst_group, 1e-12));
    checks.push_back(make_check("propagator_reversible", worst_rev, 1e-12));
    checks.push_back(make_check("propagator_unitary", worst_unitary, 1e-12));
    checks.push_back(make_check("propagator_norm", worst_norm, 1e-12));
  }

  // Spectral equation residuals: (d_t + i w) f = 0 and (d_t + i g0 w) phi = 0
  // with the time derivative taken analytically per mode.
  {
    double t = rng.uniform(0.0, 1.0 / lat.mass);
    SpinorField sf = synthesize_sf(unit, t);
    SpinorField dsf = SpinorField::zero(lat, Realization::momentum, Picture::sf, t);
    SpinorField g = to_momentum(sf);
    for (size_t p = 0; p < lat.points(); ++p) {
      cd dphase(0.0, -lat.omega(p));
      for (int c = 0; c < 4; ++c) dsf.at(p, c) = dphase * g.at(p, c);
    }
    SpinorField residual_sf = add(to_position(dsf), scale(apply_omega(sf), cd(0.0, 1.0)));
    checks.push_back(make_check("sf_equation_residual", norm(residual_sf) / norm(sf), 1e-10));

    SpinorField fw = synthesize_fw(unit, t);
    SpinorField gf = to_momentum(fw);
    SpinorField dfw = SpinorField::zero(lat, Realization::momentum, Picture::fw, t);
    for (size_t p = 0; p < lat.points(); ++p) {
      double w = lat.omega(p);
      dfw.at(p, 0) = cd(0.0, -w) * gf.at(p, 0);
      dfw.at(p, 1) = cd(0.0, -w) * gf.at(p, 1);
      dfw.at(p, 2) = cd(0.0, +w) * gf.at(p, 2);
      dfw.at(p, 3) = cd(0.0, +w) * gf.at(p, 3);
    }
    SpinorField residual_fw =
        add(to_position(dfw),
            scale(apply_matrix(apply_omega(fw), gamma0()), cd(0.0, 1.0)));
    checks.push_back(make_check("fw_equation_residual", norm(residual_fw) / norm(fw), 1e-10));
  }

  return suite;
}

//------------------------------------------------------------------------------
// Scenario runner and the suite catalog.
//------------------------------------------------------------------------------
struct ScenarioOutcome {
  std::vector<SuiteResult> suites;
  std::optional<ConservationReport> conservation;
};

inline ScenarioOutcome run_scenario(const ScenarioConfig& cfg, const AmplitudeSet& amps) {
  ScenarioOutcome outcome;
  for (const std::string& name : cfg.suites) {
    if (name == "algebra") {
      outcome.suites.push_back(run_algebra_suite());
    } else if (name == "poincare") {
      outcome.suites.push_back(run_poincare_suite(cfg.lattice, cfg.seed));
    } else if (name == "conservation") {
      ConservationReport rep;
      outcome.suites.push_back(run_conservation_suite(amps, cfg.times, &rep));
      outcome.conservation = rep;
    } else if (name == "transforms") {
      outcome.suites.push_back(run_transforms_suite(cfg.lattice, cfg.seed));
    } else if (name == "frequency") {
      outcome.suites.push_back(run_frequency_suite(cfg.lattice, cfg.seed));
    } else if (name == "roundtrip") {
      outcome.suites.push_back(run_roundtrip_suite(cfg.lattice, amps, cfg.seed));
    } else {
      throw std::invalid_argument("unknown suite: " + name);
    }
  }
  return outcome;
}

// Stable catalog text: one line per suite naming the identity it certifies.
inline std::string describe_text() {
  return
      "algebra       exact Clifford-Dirac relations in both representations, SU(2) spin\n"
      "              algebra with the spin/charge eigenvalue table, gamma-bar pair-product\n"
      "              spin identity, v involution\n"
      "poincare      commutator closure [p,p]=0, [p,j]=i(g p - g p), [j,j]=-i(g j + ...) of\n"
      "              the ten generators, and commutation of every audited generator with\n"
      "              the equation operator\n"
      "conservation  constancy in time of the 10 main and 12 additional means, agreement\n"
      "              of position-space and amplitude-space forms at t=0\n"
      "transforms    v solution map between the canonical and diagonalized pictures, V+-\n"
      "              unitarity and V+ (g0 w) V- = alpha.k + beta m per mode, W round trip,\n"
      "              evolve-then-map versus map-then-evolve in all three picture pairs\n"
      "frequency     canonical solutions are purely positive-frequency; positron content\n"
      "              of diagonalized solutions sits on the negative branch with its norm\n"
      "roundtrip     Fourier, synthesis/analysis and snapshot round trips, propagator\n"
      "              group law, reversibility, unitarity and equation residuals\n";
}

}  // namespace doublet
