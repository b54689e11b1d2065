#include <catch2/catch_amalgamated.hpp>

#include "doublet/observables.hpp"
#include "doublet/suites.hpp"

using namespace doublet;

namespace {

const Lattice kLat1{1, 256, 0.5, 1.0};
const Lattice kLat2{2, 64, 1.0, 1.0};

// One-lobe Gaussian amplitude set with a controlled spectral center.
AmplitudeSet gaussian_at(const Lattice& lat, int species, double center, double width) {
  AmplitudeSet amps = AmplitudeSet::zero(lat);
  for (size_t p = 0; p < lat.points(); ++p) {
    auto k = lat.wavevector(p);
    double q2 = 0.0;
    for (int a = 0; a < lat.dim; ++a) {
      double d = k[a] - (a == 0 ? center : 0.0);
      q2 += d * d;
    }
    amps.a[species][p] = std::exp(-q2 / (4.0 * width * width));
  }
  return normalized(amps);
}

}  // namespace

TEST_CASE("generator eigen-actions") {
  GeneratorSet gens = GeneratorSet::make(kLat1, Realization::position);

  SECTION("p0 on a de Broglie mode") {
    AmplitudeSet one = single_bin_amplitudes(kLat1, 0, {6, 0, 0});
    SpinorField f = synthesize_sf(normalized(one), 0.0);
    double k0 = kLat1.momentum(6);
    cd val = mean(gens, {GenId::Kind::p, 0}, f, 0.0);
    REQUIRE(std::abs(val - cd(std::sqrt(k0 * k0 + 1.0))) <= 1e-10);
    cd val1 = mean(gens, {GenId::Kind::p, 1}, f, 0.0);
    REQUIRE(std::abs(val1 - cd(k0)) <= 1e-10);
  }

  SECTION("breve spin annihilates the k = 0 mode") {
    GeneratorSet g2 = GeneratorSet::make(kLat2, Realization::position);
    AmplitudeSet one = single_bin_amplitudes(kLat2, 0, {0, 0, 0});
    SpinorField f = synthesize_sf(normalized(one), 0.0);
    for (int l = 1; l <= 2; ++l)
      REQUIRE(norm(g2.apply_spin_breve(l, f)) <= 1e-14);
  }

  SECTION("rotation mean on a symmetric packet reduces to the spin mean") {
    GeneratorSet g2 = GeneratorSet::make(kLat2, Realization::position);
    AmplitudeSet amps = gaussian_at(kLat2, 0, 0.0, 0.25);
    SpinorField f = synthesize_sf(amps, 0.0);
    cd j12 = mean(g2, {GenId::Kind::j, 1, 2}, f, 0.0);
    cd s12 = mean(g2, {GenId::Kind::spin, 1, 2}, f, 0.0);
    REQUIRE(std::abs(j12 - cd(0.5)) <= 1e-8);
    REQUIRE(std::abs(s12 - cd(0.5)) <= 1e-12);
  }

  SECTION("mean requires a normalized field unless overridden") {
    AmplitudeSet amps = random_amplitudes(kLat1, 3);
    SpinorField f = scale(synthesize_sf(amps, 0.0), cd(2.0));
    REQUIRE_THROWS_AS(mean(gens, {GenId::Kind::p, 0}, f, 0.0), std::invalid_argument);
    REQUIRE_NOTHROW(mean(gens, {GenId::Kind::p, 0}, f, 0.0, false));
  }

  SECTION("charge-sign and spin means on tagged packets") {
    AmplitudeSet electron = random_amplitudes(kLat1, 5, {true, true, false, false});
    SpinorField fe = synthesize_sf(electron, 0.0);
    auto sc = build_spin_and_charge();
    REQUIRE(std::abs(matrix_mean(fe, sc.charge_sign) - cd(-1.0)) <= 1e-12);

    AmplitudeSet up = random_amplitudes(kLat1, 6, {true, false, false, false});
    SpinorField fu = synthesize_sf(up, 0.0);
    REQUIRE(std::abs(matrix_mean(fu, sc.spin.s[2]) - cd(0.5)) <= 1e-12);
  }
}

TEST_CASE("generator structure") {
  GeneratorSet gens = GeneratorSet::make(kLat2, Realization::position);
  SpinorField f = random_packet(kLat2, 11);

  SECTION("rotation splits into orbital plus spin") {
    SpinorField j = gens.apply_j(1, 2, f, 0.0);
    SpinorField split = add(gens.apply_m(1, 2, f, 0.0), gens.apply_spin(1, 2, f));
    REQUIRE(distance(j, split) == 0.0);
  }

  SECTION("hermitian on test packets") {
    SpinorField g = random_packet(kLat2, 12);
    double t = 0.4;
    for (const GenId& id : audited_quantities()) {
      cd lhs = inner(g, gens.apply(id, f, t));
      cd rhs = inner(gens.apply(id, g, t), f);
      INFO(id.name());
      REQUIRE(std::abs(lhs - rhs) <= 1e-8);
    }
  }

  SECTION("spin commutes with the orbital part") {
    auto spin = build_spin_and_charge().spin;
    for (int l = 1; l <= 2; ++l)
      for (int n = l + 1; n <= 2; ++n) {
        SpinorField a = apply_matrix(gens.apply_m(1, 2, f, 0.3), spin.tensor(l, n));
        SpinorField b = gens.apply_m(1, 2, apply_matrix(f, spin.tensor(l, n)), 0.3);
        REQUIRE(distance(a, b) / norm(f) <= 1e-12);
      }
  }

  SECTION("means agree between the two realizations") {
    GeneratorSet kgens = GeneratorSet::make(kLat2, Realization::momentum);
    double t = 0.7;
    for (const GenId& id : audited_quantities()) {
      cd x_val = mean(gens, id, f, t);
      cd k_val = mean(kgens, id, f, t);
      INFO(id.name());
      REQUIRE(std::abs(x_val - k_val) <= 1e-8 * std::max(1.0, std::abs(x_val)));
    }
  }

  SECTION("out-of-range components act as zero") {
    REQUIRE(norm(gens.apply_p(3, f)) == 0.0);
    REQUIRE(norm(gens.apply_j(1, 3, f, 0.2)) == 0.0);
    REQUIRE(norm(gens.apply_spin_breve(3, f)) == 0.0);
  }
}

TEST_CASE("poincare commutators") {
  SECTION("momentum components commute tightly") {
    GeneratorSet gens = GeneratorSet::make(kLat2, Realization::position);
    SpinorField f = random_packet(kLat2, 21);
    SpinorField ab = gens.apply_p(1, gens.apply_p(2, f));
    SpinorField ba = gens.apply_p(2, gens.apply_p(1, f));
    REQUIRE(distance(ab, ba) / norm(f) <= 1e-12);
  }

  SECTION("all relations close in one dimension") {
    auto checks = check_poincare_algebra(kLat1, 2, 31);
    REQUIRE(checks.size() == 45);
    for (const auto& c : checks) {
      INFO(c.name << " residual " << c.residual);
      REQUIRE(c.pass);
    }
  }

  SECTION("all relations close in two dimensions, including boost-boost") {
    auto checks = check_poincare_algebra(kLat2, 2, 32, 0.5);
    bool saw_nontrivial_boost = false;
    for (const auto& c : checks) {
      INFO(c.name << " residual " << c.residual);
      REQUIRE(c.pass);
      if (c.name == "[J01,J02]") saw_nontrivial_boost = true;
    }
    REQUIRE(saw_nontrivial_boost);
  }

  SECTION("all relations close in three dimensions") {
    Lattice lat3{3, 32, 1.0, 1.0};
    auto checks = check_poincare_algebra(lat3, 1, 33);
    for (const auto& c : checks) {
      INFO(c.name << " residual " << c.residual);
      REQUIRE(c.pass);
    }
  }

  SECTION("every generator commutes with the equation operator") {
    auto checks = check_symmetry_commutators(kLat2, 2, 34, 0.6);
    for (const auto& c : checks) {
      INFO(c.name << " residual " << c.residual);
      REQUIRE(c.pass);
    }
  }
}

TEST_CASE("conservation audit") {
  SECTION("stationary k = 0 state: every mean constant to near machine precision") {
    AmplitudeSet one = single_bin_amplitudes(kLat1, 0, {0, 0, 0});
    // A plane wave violates the box rule, so audit the means directly.
    GeneratorSet gens = GeneratorSet::make(kLat1, Realization::position);
    AmplitudeSet unit = normalized(one);
    auto ids = audited_quantities();
    for (double t : {0.0, 1.0, 2.0}) {
      SpinorField f = synthesize_sf(unit, t);
      for (size_t q = 0; q < ids.size(); ++q) {
        cd v0 = mean(gens, ids[q], synthesize_sf(unit, 0.0), 0.0);
        cd vt = mean(gens, ids[q], f, t);
        INFO(ids[q].name());
        REQUIRE(std::abs(vt - v0) <= 1e-12);
      }
    }
  }

  SECTION("random packet: all 22 means constant, boosts included") {
    AmplitudeSet amps = random_amplitudes(kLat1, 41);
    ConservationReport rep = audit_conservation(amps, {0.0, 1.0, 2.0});
    REQUIRE(rep.names.size() == 22);
    for (size_t q = 0; q < rep.names.size(); ++q) {
      INFO(rep.names[q] << " drift " << rep.drifts[q]);
      REQUIRE(rep.verdicts[q]);
      REQUIRE(rep.max_imag[q] <= 1e-8);
    }
  }

  SECTION("negative control: dropping the explicit boost t-term breaks constancy") {
    AmplitudeSet amps = gaussian_at(kLat1, 0, 0.6, 0.25);
    AuditOptions opts;
    opts.boost_time_term = false;
    ConservationReport rep = audit_conservation(amps, {0.0, 1.0, 2.0}, opts);
    bool j01_failed = false;
    for (size_t q = 0; q < rep.names.size(); ++q)
      if (rep.names[q] == "J01") {
        j01_failed = !rep.verdicts[q];
        // The drift is of order |<p1>| * dt, far above tolerance.
        REQUIRE(rep.drifts[q] > 0.1);
      }
    REQUIRE(j01_failed);
  }

  SECTION("needs at least three times") {
    AmplitudeSet amps = random_amplitudes(kLat1, 42);
    REQUIRE_THROWS_AS(audit_conservation(amps, {0.0, 1.0}), std::invalid_argument);
  }
}

TEST_CASE("amplitude-space means") {
  SECTION("single bin pins the momentum exactly") {
    AmplitudeSet one = normalized(single_bin_amplitudes(kLat1, 1, {-9, 0, 0}));
    auto means = amplitude_means(one);
    double k0 = -9 * kLat1.dk();
    for (const auto& [name, value] : means) {
      if (name == "P1") REQUIRE(std::abs(value - cd(k0)) <= 1e-12);
      if (name == "P0") REQUIRE(std::abs(value - cd(std::sqrt(k0 * k0 + 1.0))) <= 1e-12);
    }
  }

  SECTION("agree with position-space means at t = 0") {
    for (const Lattice& lat : {kLat1, kLat2}) {
      AmplitudeSet amps = random_amplitudes(lat, 51);
      GeneratorSet xgens = GeneratorSet::make(lat, Realization::position);
      SpinorField f0 = synthesize_sf(amps, 0.0);
      auto ids = main_quantities();
      auto amp_side = amplitude_means(amps);
      for (size_t q = 0; q < ids.size(); ++q) {
        cd pos = mean(xgens, ids[q], f0, 0.0);
        INFO(lat.dim << "d " << ids[q].name());
        REQUIRE(std::abs(pos - amp_side[q].second) <=
                1e-8 * std::max(1.0, std::abs(pos)));
      }
    }
  }

  SECTION("sum of omega-weighted amplitude masses equals the p0 mean") {
    AmplitudeSet amps = random_amplitudes(kLat1, 52);
    double direct = 0.0;
    for (size_t p = 0; p < kLat1.points(); ++p)
      for (int c = 0; c < 4; ++c)
        direct += kLat1.omega(p) * std::norm(amps.a[c][p]);
    direct *= kLat1.measure(Realization::momentum);
    GeneratorSet gens = GeneratorSet::make(kLat1, Realization::position);
    cd pos = mean(gens, {GenId::Kind::p, 0}, synthesize_sf(amps, 0.0), 0.0);
    REQUIRE(std::abs(pos - cd(direct)) <= 1e-10);
  }
}

TEST_CASE("poincare and conservation suites pass") {
  SuiteResult pc = run_poincare_suite(kLat1, 61, 2);
  for (const auto& c : pc.checks) {
    INFO(c.name << " residual " << c.residual);
    REQUIRE(c.pass);
  }
  SuiteResult cons = run_conservation_suite(random_amplitudes(kLat1, 62), {0.0, 1.0, 2.0});
  for (const auto& c : cons.checks) {
    INFO(c.name << " residual " << c.residual);
    REQUIRE(c.pass);
  }
}
