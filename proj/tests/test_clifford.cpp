#include <catch2/catch_amalgamated.hpp>

#include "doublet/clifford.hpp"

using namespace doublet;

namespace {
const cd I(0.0, 1.0);

Spinor4 spinor(cd a, cd b, cd c, cd d) { return Spinor4{a, b, c, d}; }
}  // namespace

TEST_CASE("gamma matrices in the Pauli-Dirac representation") {
  auto g = build_gamma_pd();

  SECTION("gamma0 is diag(1,1,-1,-1)") {
    REQUIRE(g[0] == Mat4::diag(1.0, 1.0, -1.0, -1.0));
  }

  SECTION("anticommutators give twice the metric, exactly") {
    for (int mu = 0; mu <= 3; ++mu)
      for (int nu = 0; nu <= 3; ++nu) {
        Mat4 anti = g[mu] * g[nu] + g[nu] * g[mu];
        REQUIRE(anti == cd(2.0 * metric(mu, nu)) * Mat4::identity());
      }
  }

  SECTION("spatial squares are -I") {
    for (int k = 1; k <= 3; ++k) REQUIRE(g[k] * g[k] == -Mat4::identity());
  }

  SECTION("gamma4 is the ordered product") {
    REQUIRE(g[4] == g[0] * g[1] * g[2] * g[3]);
  }
}

TEST_CASE("gamma-bar representation") {
  auto gb = build_gamma_bar();
  auto g = build_gamma_pd();
  auto basis = real_basis_spinors();

  SECTION("masks: bar0 linear, the rest fully antilinear") {
    REQUIRE(gb[0].linear());
    for (int mu = 1; mu <= 4; ++mu)
      for (bool m : gb[mu].conj_mask) REQUIRE(m);
  }

  SECTION("bar0 acts as gamma0 with no conjugation") {
    REQUIRE(gb[0].apply(spinor(1.0, 0.0, 0.0, I)) == spinor(1.0, 0.0, 0.0, -I));
  }

  SECTION("bar1 conjugates before gamma1") {
    REQUIRE(gb[1].apply(spinor(I, 0.0, 0.0, 0.0)) == spinor(0.0, 0.0, 0.0, I));
  }

  SECTION("anticommutators as operator identities on the real basis") {
    for (int mu = 0; mu <= 3; ++mu)
      for (int nu = 0; nu <= 3; ++nu)
        for (const auto& s : basis) {
          Spinor4 lhs = gb[mu].apply(gb[nu].apply(s));
          Spinor4 rhs = gb[nu].apply(gb[mu].apply(s));
          for (int i = 0; i < 4; ++i)
            REQUIRE(lhs[i] + rhs[i] == cd(2.0 * metric(mu, nu)) * s[i]);
        }
  }

  SECTION("inverses: bar0^-1 = bar0, barl^-1 = -barl") {
    auto id = ConjugatingMatrixOp::identity_op();
    for (int mu = 0; mu <= 3; ++mu) {
      ConjugatingMatrixOp inv = gb[mu];
      if (mu != 0) inv.mat = -inv.mat;
      REQUIRE(op_equal(compose_strict(gb[mu], inv), id));
      REQUIRE(op_equal(compose_strict(inv, gb[mu]), id));
    }
  }

  SECTION("bar matrices equal the v-sandwich of the plain gammas") {
    for (int mu = 0; mu <= 3; ++mu) {
      auto sandwich = compose_strict(
          compose_strict(v_op(), ConjugatingMatrixOp::linear_op(g[mu])), v_op());
      REQUIRE(op_equal(sandwich, gb[mu]));
    }
  }
}

TEST_CASE("spin and charge-sign matrices") {
  auto sc = build_spin_and_charge();
  const auto& s = sc.spin.s;

  SECTION("su(2) commutators, exactly") {
    REQUIRE(s[0] * s[1] - s[1] * s[0] == I * s[2]);
    REQUIRE(s[1] * s[2] - s[2] * s[1] == I * s[0]);
    REQUIRE(s[2] * s[0] - s[0] * s[2] == I * s[1]);
  }

  SECTION("s3 block structure and eigenvalues") {
    REQUIRE(s[2] == Mat4::diag(0.5, -0.5, -0.5, 0.5));
    Spinor4 d1 = spinor(1.0, 0.0, 0.0, 0.0);
    Spinor4 d3 = spinor(0.0, 0.0, 1.0, 0.0);
    REQUIRE(s[2].apply(d1) == spinor(0.5, 0.0, 0.0, 0.0));
    REQUIRE(s[2].apply(d3) == spinor(0.0, 0.0, -0.5, 0.0));
  }

  SECTION("charge sign eigenvalues") {
    REQUIRE(sc.charge_sign == Mat4::diag(-1.0, -1.0, 1.0, 1.0));
    Spinor4 d1 = spinor(1.0, 0.0, 0.0, 0.0);
    Spinor4 d4 = spinor(0.0, 0.0, 0.0, 1.0);
    REQUIRE(sc.charge_sign.apply(d1) == spinor(-1.0, 0.0, 0.0, 0.0));
    REQUIRE(sc.charge_sign.apply(d4) == spinor(0.0, 0.0, 0.0, 1.0));
  }

  SECTION("charge sign commutes with spin") {
    for (int j = 0; j < 3; ++j)
      REQUIRE(s[j] * sc.charge_sign == sc.charge_sign * s[j]);
  }

  SECTION("total spin squared is 3/4") {
    REQUIRE(s[0] * s[0] + s[1] * s[1] + s[2] * s[2] == cd(0.75) * Mat4::identity());
  }

  SECTION("antisymmetric tensor accessor") {
    REQUIRE(sc.spin.tensor(2, 3) == s[0]);
    REQUIRE(sc.spin.tensor(3, 2) == -s[0]);
    REQUIRE(sc.spin.tensor(1, 2) == s[2]);
    REQUIRE(sc.spin.tensor(1, 1) == Mat4::zero());
  }
}

TEST_CASE("spin from gamma-bar pair products") {
  auto gb = build_gamma_bar();
  SpinTriple from_bar = spin_from_gamma_bar();
  SpinTriple direct = build_spin_and_charge().spin;

  SECTION("matches the block form entry-wise") {
    for (int j = 0; j < 3; ++j) REQUIRE(from_bar.s[j] == direct.s[j]);
  }

  SECTION("pair products are linear: the two conjugations cancel") {
    auto p = compose_strict(gb[1], gb[2]);
    REQUIRE(p.linear());
  }

  SECTION("(i/2) bar1 bar2 is Hermitian") {
    Mat4 m = cd(0.0, 0.5) * compose_strict(gb[1], gb[2]).mat;
    REQUIRE(m == m.adjoint());
  }
}

TEST_CASE("conjugating operator composition") {
  SECTION("v is an involution equal to its inverse") {
    auto vv = compose_strict(v_op(), v_op());
    REQUIRE(op_equal(vv, ConjugatingMatrixOp::identity_op()));
  }

  SECTION("rejects a matrix whose column straddles the mask blocks") {
    Mat4 bad;
    bad(0, 0) = 1.0;
    bad(2, 0) = 1.0;  // column 0 feeds both an unmasked and a masked row of v
    REQUIRE_FALSE(compose(v_op(), ConjugatingMatrixOp::linear_op(bad)).has_value());
    REQUIRE_THROWS_AS(compose_strict(v_op(), ConjugatingMatrixOp::linear_op(bad)),
                      std::logic_error);
  }

  SECTION("composition reproduces direct action on random-ish spinors") {
    auto gb = build_gamma_bar();
    auto prod = compose_strict(gb[2], v_op());
    Spinor4 probe = spinor(cd(0.3, -1.2), cd(-0.7, 0.2), cd(1.5, 0.8), cd(-0.1, 2.0));
    REQUIRE(prod.apply(probe) == gb[2].apply(v_op().apply(probe)));
  }
}
