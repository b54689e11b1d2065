#include <catch2/catch_amalgamated.hpp>

#include <Eigen/Dense>

#include "doublet/evolve.hpp"
#include "doublet/packets.hpp"

using namespace doublet;

namespace {

const Lattice kLat{1, 128, 0.5, 1.0};

// Independent matrix exponential: scaling and squaring with a Taylor tail.
Mat4 expm_oracle(const Mat4& m) {
  double amp = 0.0;
  for (const cd& z : m.e) amp = std::max(amp, std::abs(z));
  int squarings = 0;
  while (amp > 0.25 && squarings < 60) {
    amp *= 0.5;
    ++squarings;
  }
  Mat4 a = cd(std::pow(0.5, squarings)) * m;
  Mat4 sum = Mat4::identity();
  Mat4 term = Mat4::identity();
  for (int k = 1; k <= 30; ++k) {
    term = cd(1.0 / k) * (term * a);
    sum = sum + term;
  }
  for (int s = 0; s < squarings; ++s) sum = sum * sum;
  return sum;
}

Eigen::Matrix4cd to_eigen(const Mat4& m) {
  Eigen::Matrix4cd e;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) e(i, j) = m(i, j);
  return e;
}

}  // namespace

TEST_CASE("dirac hamiltonian per mode") {
  Lattice lat{3, 8, 0.9, 1.4};
  DeterministicRng rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    size_t p = static_cast<size_t>(rng.uniform() * static_cast<double>(lat.points()));
    p = std::min(p, lat.points() - 1);
    Mat4 h = dirac_hamiltonian(lat, lat.wavevector(p));
    double w2 = lat.omega(p) * lat.omega(p);
    REQUIRE(max_abs_diff(h * h, cd(w2) * Mat4::identity()) <= 1e-12 * w2);
    REQUIRE(max_abs_diff(h, h.adjoint()) == 0.0);
  }
}

TEST_CASE("propagator mode matrices") {
  double dt = 0.23;

  SECTION("dirac at k = 0 is exp(-i beta m dt)") {
    Propagator prop = build_propagator(kLat, Picture::dirac, dt);
    cd em = std::exp(cd(0.0, -kLat.mass * dt));
    cd ep = std::exp(cd(0.0, +kLat.mass * dt));
    REQUIRE(max_abs_diff(prop.mode_matrices[0], Mat4::diag(em, em, ep, ep)) <= 1e-15);
  }

  SECTION("dirac matrices match a scaling-and-squaring exponential oracle") {
    Lattice lat{3, 6, 0.8, 1.2};
    Propagator prop = build_propagator(lat, Picture::dirac, dt);
    DeterministicRng rng(17);
    for (int trial = 0; trial < 100; ++trial) {
      size_t p = static_cast<size_t>(rng.uniform() * static_cast<double>(lat.points()));
      p = std::min(p, lat.points() - 1);
      Mat4 h = dirac_hamiltonian(lat, lat.wavevector(p));
      Mat4 ref = expm_oracle(cd(0.0, -dt) * h);
      REQUIRE(max_abs_diff(prop.mode_matrices[p], ref) <= 1e-12);
    }
  }

  SECTION("every mode matrix is unitary") {
    for (Picture pic : {Picture::sf, Picture::fw, Picture::dirac}) {
      Propagator prop = build_propagator(kLat, pic, dt);
      double worst = 0.0;
      for (const Mat4& u : prop.mode_matrices)
        worst = std::max(worst, max_abs_diff(u.adjoint() * u, Mat4::identity()));
      REQUIRE(worst <= 1e-12);
    }
  }

  SECTION("eigenphases: single branch in the canonical picture, both otherwise") {
    Propagator sf = build_propagator(kLat, Picture::sf, dt);
    Propagator fw = build_propagator(kLat, Picture::fw, dt);
    Propagator dirac = build_propagator(kLat, Picture::dirac, dt);
    for (size_t p : {size_t(1), size_t(17), size_t(64), size_t(100)}) {
      double w = kLat.omega(p);
      // Canonical: all four eigenphases are -w dt with w >= m.
      Eigen::ComplexEigenSolver<Eigen::Matrix4cd> es(to_eigen(sf.mode_matrices[p]));
      for (int i = 0; i < 4; ++i) {
        double phase = std::arg(es.eigenvalues()(i));
        REQUIRE(std::abs(std::exp(cd(0.0, phase)) - std::exp(cd(0.0, -w * dt))) <= 1e-12);
      }
      REQUIRE(w >= kLat.mass);
      // Diagonalized and Dirac pictures carry both frequency signs.
      for (const Propagator* prop : {&fw, &dirac}) {
        Eigen::ComplexEigenSolver<Eigen::Matrix4cd> e2(to_eigen(prop->mode_matrices[p]));
        int plus = 0, minus = 0;
        for (int i = 0; i < 4; ++i) {
          cd lambda = e2.eigenvalues()(i);
          if (std::abs(lambda - std::exp(cd(0.0, -w * dt))) < 1e-9) ++minus;
          if (std::abs(lambda - std::exp(cd(0.0, +w * dt))) < 1e-9) ++plus;
        }
        REQUIRE(plus == 2);
        REQUIRE(minus == 2);
      }
    }
  }
}

TEST_CASE("stepping") {
  AmplitudeSet amps = random_amplitudes(kLat, 23);
  SpinorField f = synthesize_sf(amps, 0.0);
  double dt = 0.1;

  SECTION("single mode picks up exactly e^{-i w dt}") {
    AmplitudeSet one = single_bin_amplitudes(kLat, 0, {4, 0, 0});
    SpinorField mode = synthesize_sf(one, 0.0);
    SpinorField stepped = step(mode, build_propagator(kLat, Picture::sf, dt));
    double w = std::sqrt(std::pow(kLat.momentum(4), 2) + 1.0);
    SpinorField expect = scale(mode, std::exp(cd(0.0, -w * dt)));
    expect.time = dt;
    REQUIRE(distance(stepped, expect) / norm(mode) <= 1e-13);
    REQUIRE(stepped.time == Catch::Approx(dt));
  }

  SECTION("two half steps equal one full step") {
    Propagator full = build_propagator(kLat, Picture::sf, dt);
    Propagator half = build_propagator(kLat, Picture::sf, dt / 2);
    REQUIRE(distance(step(step(f, half), half), step(f, full)) <= 1e-12);
  }

  SECTION("group property at unequal splits") {
    Propagator a = build_propagator(kLat, Picture::sf, 0.3);
    Propagator b = build_propagator(kLat, Picture::sf, 0.45);
    Propagator ab = build_propagator(kLat, Picture::sf, 0.75);
    REQUIRE(distance(step(step(f, a), b), step(f, ab)) <= 1e-12);
  }

  SECTION("forward then backward is the identity") {
    Propagator fwd = build_propagator(kLat, Picture::sf, dt);
    Propagator back = build_propagator(kLat, Picture::sf, -dt);
    REQUIRE(distance(step(step(f, fwd), back), f) <= 1e-12);
  }

  SECTION("norm preserved and picture mismatch rejected") {
    Propagator fw_prop = build_propagator(kLat, Picture::fw, dt);
    REQUIRE_THROWS_AS(step(f, fw_prop), std::invalid_argument);
    Propagator sf_prop = build_propagator(kLat, Picture::sf, dt);
    REQUIRE(std::abs(norm(step(f, sf_prop)) - norm(f)) <= 1e-12);
  }

  SECTION("stepping matches synthesis at the shifted time") {
    SpinorField direct = synthesize_sf(amps, 0.6);
    SpinorField stepped = step(f, build_propagator(kLat, Picture::sf, 0.6));
    REQUIRE(distance(direct, stepped) / norm(direct) <= 1e-12);
  }

  SECTION("fw stepping matches fw synthesis") {
    SpinorField phi = synthesize_fw(amps, 0.0);
    SpinorField direct = synthesize_fw(amps, 0.8);
    SpinorField stepped = step(phi, build_propagator(kLat, Picture::fw, 0.8));
    REQUIRE(distance(direct, stepped) / norm(direct) <= 1e-12);
  }
}
