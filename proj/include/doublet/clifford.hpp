//==============================================================================
// clifford.hpp
// Exact 4x4 matrix algebra for the spin-1/2 particle-antiparticle doublet:
// Pauli matrices, Dirac gamma matrices in the Pauli-Dirac representation, the
// conjugation-twisted ("quantum-mechanical") gamma-bar representation, the
// block conjugation operator v, and the spin/charge matrices.
//
// Every entry is a Gaussian (half-)integer, so all algebraic identities are
// checked with exact equality, never with tolerances.  Antilinear factors are
// carried as per-component conjugation masks applied before the matrix.
//==============================================================================
#pragma once

#include <array>
#include <complex>
#include <cstdlib>
#include <optional>
#include <stdexcept>

namespace doublet {

using cd = std::complex<double>;
using Spinor4 = std::array<cd, 4>;

//------------------------------------------------------------------------------
// Dense 4x4 complex matrix with exact value semantics.
//------------------------------------------------------------------------------
struct Mat4 {
  std::array<cd, 16> e{};

  cd& operator()(int r, int c) { return e[static_cast<size_t>(r) * 4 + c]; }
  const cd& operator()(int r, int c) const {
    return e[static_cast<size_t>(r) * 4 + c];
  }

  static Mat4 zero() { return Mat4{}; }
  static Mat4 identity() {
    Mat4 m;
    for (int i = 0; i < 4; ++i) m(i, i) = 1.0;
    return m;
  }
  static Mat4 diag(cd a, cd b, cd c, cd d) {
    Mat4 m;
    m(0, 0) = a; m(1, 1) = b; m(2, 2) = c; m(3, 3) = d;
    return m;
  }

  Mat4 conjugated() const {
    Mat4 r;
    for (size_t i = 0; i < 16; ++i) r.e[i] = std::conj(e[i]);
    return r;
  }
  Mat4 adjoint() const {
    Mat4 r;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) r(i, j) = std::conj((*this)(j, i));
    return r;
  }

  Spinor4 apply(const Spinor4& s) const {
    Spinor4 r{};
    for (int i = 0; i < 4; ++i) {
      cd acc = 0.0;
      for (int j = 0; j < 4; ++j) acc += (*this)(i, j) * s[j];
      r[i] = acc;
    }
    return r;
  }

  friend Mat4 operator*(const Mat4& a, const Mat4& b) {
    Mat4 r;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) {
        cd acc = 0.0;
        for (int k = 0; k < 4; ++k) acc += a(i, k) * b(k, j);
        r(i, j) = acc;
      }
    return r;
  }
  friend Mat4 operator+(const Mat4& a, const Mat4& b) {
    Mat4 r;
    for (size_t i = 0; i < 16; ++i) r.e[i] = a.e[i] + b.e[i];
    return r;
  }
  friend Mat4 operator-(const Mat4& a, const Mat4& b) {
    Mat4 r;
    for (size_t i = 0; i < 16; ++i) r.e[i] = a.e[i] - b.e[i];
    return r;
  }
  friend Mat4 operator*(cd s, const Mat4& a) {
    Mat4 r;
    for (size_t i = 0; i < 16; ++i) r.e[i] = s * a.e[i];
    return r;
  }
  friend Mat4 operator-(const Mat4& a) { return cd(-1.0) * a; }
  friend bool operator==(const Mat4& a, const Mat4& b) { return a.e == b.e; }
};

inline double max_abs_diff(const Mat4& a, const Mat4& b) {
  double m = 0.0;
  for (size_t i = 0; i < 16; ++i) m = std::max(m, std::abs(a.e[i] - b.e[i]));
  return m;
}

inline double max_abs_diff(const Spinor4& a, const Spinor4& b) {
  double m = 0.0;
  for (int i = 0; i < 4; ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

//------------------------------------------------------------------------------
// Real-linear operator on C^4 of the form  s -> M . K(s), where K conjugates
// exactly the masked components before the matrix acts.  Covers plain linear
// matrices (empty mask), fully antilinear operators such as the gamma-bar
// matrices (full mask), and the block operator v (lower-half mask).
//------------------------------------------------------------------------------
struct ConjugatingMatrixOp {
  Mat4 mat = Mat4::identity();
  std::array<bool, 4> conj_mask{false, false, false, false};

  Spinor4 apply(const Spinor4& s) const {
    Spinor4 t = s;
    for (int i = 0; i < 4; ++i)
      if (conj_mask[i]) t[i] = std::conj(t[i]);
    return mat.apply(t);
  }

  bool linear() const {
    return !conj_mask[0] && !conj_mask[1] && !conj_mask[2] && !conj_mask[3];
  }

  static ConjugatingMatrixOp identity_op() { return ConjugatingMatrixOp{}; }
  static ConjugatingMatrixOp linear_op(const Mat4& m) {
    return ConjugatingMatrixOp{m, {false, false, false, false}};
  }
  static ConjugatingMatrixOp antilinear_op(const Mat4& m) {
    return ConjugatingMatrixOp{m, {true, true, true, true}};
  }
};

// Composition (a after b).  Representable in this form only when every column
// of b's matrix is supported entirely on a-masked rows or entirely on
// unmasked rows; otherwise the combined action mixes z and conj(z) within a
// single component and the routine reports failure.
inline std::optional<ConjugatingMatrixOp> compose(const ConjugatingMatrixOp& a,
                                                  const ConjugatingMatrixOp& b) {
  std::array<bool, 4> col_conj{};
  for (int j = 0; j < 4; ++j) {
    bool seen_masked = false, seen_unmasked = false;
    for (int i = 0; i < 4; ++i) {
      if (b.mat(i, j) == cd(0.0)) continue;
      (a.conj_mask[i] ? seen_masked : seen_unmasked) = true;
    }
    if (seen_masked && seen_unmasked) return std::nullopt;
    col_conj[j] = seen_masked;
  }
  Mat4 n;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      n(i, j) = a.conj_mask[i] ? std::conj(b.mat(i, j)) : b.mat(i, j);
  ConjugatingMatrixOp r;
  r.mat = a.mat * n;
  for (int j = 0; j < 4; ++j) r.conj_mask[j] = col_conj[j] != b.conj_mask[j];
  return r;
}

inline ConjugatingMatrixOp compose_strict(const ConjugatingMatrixOp& a,
                                          const ConjugatingMatrixOp& b) {
  auto r = compose(a, b);
  if (!r) throw std::logic_error("ConjugatingMatrixOp composition is not representable");
  return *r;
}

// The 8 real basis spinors {d_a, i d_a}.  Action on these determines any
// real-linear operator on C^4; the 4 complex basis vectors alone do not fix
// the antilinear part.
inline std::array<Spinor4, 8> real_basis_spinors() {
  std::array<Spinor4, 8> b{};
  for (int a = 0; a < 4; ++a) {
    b[a][a] = 1.0;
    b[4 + a][a] = cd(0.0, 1.0);
  }
  return b;
}

inline bool op_equal(const ConjugatingMatrixOp& a, const ConjugatingMatrixOp& b) {
  for (const auto& s : real_basis_spinors())
    if (a.apply(s) != b.apply(s)) return false;
  return true;
}

//------------------------------------------------------------------------------
// Matrix builders
//------------------------------------------------------------------------------

inline std::array<Mat4, 3> pauli() {
  const cd i(0.0, 1.0);
  Mat4 s1, s2, s3;
  s1(0, 1) = 1.0; s1(1, 0) = 1.0;
  s2(0, 1) = -i;  s2(1, 0) = i;
  s3(0, 0) = 1.0; s3(1, 1) = -1.0;
  return {s1, s2, s3};
}

namespace detail {
// Places a 2x2 block at rows r0..r0+1, cols c0..c0+1.
inline void put_block(Mat4& m, int r0, int c0, const Mat4& two_by_two, cd scale) {
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c) m(r0 + r, c0 + c) = scale * two_by_two(r, c);
}
}  // namespace detail

// gamma^0..gamma^3 in the Pauli-Dirac representation plus gamma^4 defined as
// the ordered product gamma^0 gamma^1 gamma^2 gamma^3.
inline std::array<Mat4, 5> build_gamma_pd() {
  auto sig = pauli();
  std::array<Mat4, 5> g;
  g[0] = Mat4::diag(1.0, 1.0, -1.0, -1.0);
  for (int k = 0; k < 3; ++k) {
    Mat4 m;
    detail::put_block(m, 0, 2, sig[k], 1.0);
    detail::put_block(m, 2, 0, sig[k], -1.0);
    g[k + 1] = m;
  }
  g[4] = g[0] * g[1] * g[2] * g[3];
  return g;
}

inline Mat4 gamma0() { return Mat4::diag(1.0, 1.0, -1.0, -1.0); }

// Dirac Hamiltonian building blocks: alpha^k = gamma^0 gamma^k, beta = gamma^0.
inline std::array<Mat4, 3> alpha_matrices() {
  auto g = build_gamma_pd();
  return {g[0] * g[1], g[0] * g[2], g[0] * g[3]};
}

// v = diag(I2, C I2): conjugates the lower two components only.  Involutive.
inline ConjugatingMatrixOp v_op() {
  return ConjugatingMatrixOp{Mat4::identity(), {false, false, true, true}};
}

// Conjugation-twisted representation: bar0 = g0, bar1 = g1 C, bar2 = g0 g2 C,
// bar3 = g3 C, bar4 = g0 g4 C.  Equal to v gamma^mu v as operators.
inline std::array<ConjugatingMatrixOp, 5> build_gamma_bar() {
  auto g = build_gamma_pd();
  std::array<ConjugatingMatrixOp, 5> r;
  r[0] = ConjugatingMatrixOp::linear_op(g[0]);
  r[1] = ConjugatingMatrixOp::antilinear_op(g[1]);
  r[2] = ConjugatingMatrixOp::antilinear_op(g[0] * g[2]);
  r[3] = ConjugatingMatrixOp::antilinear_op(g[3]);
  r[4] = ConjugatingMatrixOp::antilinear_op(g[0] * g[4]);
  return r;
}

//------------------------------------------------------------------------------
// Spin and charge-sign matrices.
// Spin: s = (1/2) diag(sigma, -sigma*); the two conjugation factors around the
// lower block cancel, leaving the plain linear matrix -sigma*.
// Charge sign: g = -gamma^0 = diag(-1,-1,1,1).
//------------------------------------------------------------------------------
struct SpinTriple {
  std::array<Mat4, 3> s;  // s[0]=s1=s_23, s[1]=s2=s_31, s[2]=s3=s_12

  const Mat4& axis(int j) const { return s.at(static_cast<size_t>(j - 1)); }

  // Antisymmetric tensor component s_{ln}, l,n in {1,2,3}.
  Mat4 tensor(int l, int n) const {
    if (l == n) return Mat4::zero();
    if (l == 2 && n == 3) return s[0];
    if (l == 3 && n == 1) return s[1];
    if (l == 1 && n == 2) return s[2];
    return -tensor(n, l);
  }
};

struct SpinAndCharge {
  SpinTriple spin;
  Mat4 charge_sign;
};

inline SpinAndCharge build_spin_and_charge() {
  auto sig = pauli();
  SpinTriple t;
  for (int k = 0; k < 3; ++k) {
    Mat4 m;
    detail::put_block(m, 0, 0, sig[k], 0.5);
    detail::put_block(m, 2, 2, sig[k].conjugated(), -0.5);
    t.s[static_cast<size_t>(k)] = m;
  }
  return SpinAndCharge{t, Mat4::diag(-1.0, -1.0, 1.0, 1.0)};
}

// Spin rebuilt from the gamma-bar products (i/2)(bar2 bar3, bar3 bar1,
// bar1 bar2).  Each product of two fully antilinear factors is linear, so the
// result is an ordinary SpinTriple; must reproduce build_spin_and_charge().
inline SpinTriple spin_from_gamma_bar() {
  auto gb = build_gamma_bar();
  const cd half_i(0.0, 0.5);
  auto product = [&](int a, int b) {
    ConjugatingMatrixOp p = compose_strict(gb[static_cast<size_t>(a)],
                                           gb[static_cast<size_t>(b)]);
    if (!p.linear())
      throw std::logic_error("gamma-bar pair product must be linear");
    return half_i * p.mat;
  };
  return SpinTriple{{product(2, 3), product(3, 1), product(1, 2)}};
}

// Minkowski metric diag(1,-1,-1,-1); identical with raised or lowered pairs.
inline double metric(int mu, int nu) {
  if (mu != nu) return 0.0;
  return mu == 0 ? 1.0 : -1.0;
}

}  // namespace doublet
