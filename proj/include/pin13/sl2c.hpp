#pragma once

#include <array>
#include <cmath>

#include "pin13/matrix.hpp"
#include "pin13/rng.hpp"

namespace pin13 {

// sigma_0..sigma_3 together with their duals sigma~_m = eps_m * sigma_m^{-1},
// eps_m = det(sigma_m).  Both quadruples are fixed constant matrices; the
// dual identity is re-derived in the verification suite.
struct PauliSet {
  std::array<Mat2C, 4> sigma;
  std::array<Mat2C, 4> sigma_tilde;
  std::array<double, 4> epsilon;
};

namespace detail {

inline Mat2C mat2(cplx a, cplx b, cplx c, cplx d) {
  Mat2C m;
  m(0, 0) = a;
  m(0, 1) = b;
  m(1, 0) = c;
  m(1, 1) = d;
  return m;
}

}  // namespace detail

inline const PauliSet& pauli_set() {
  static const PauliSet set = [] {
    const cplx i(0.0, 1.0);
    PauliSet p;
    p.sigma[0] = detail::mat2(1, 0, 0, 1);
    p.sigma[1] = detail::mat2(0, 1, 1, 0);
    p.sigma[2] = detail::mat2(0, -i, i, 0);
    p.sigma[3] = detail::mat2(1, 0, 0, -1);
    p.sigma_tilde[0] = detail::mat2(1, 0, 0, 1);
    p.sigma_tilde[1] = detail::mat2(0, -1, -1, 0);
    p.sigma_tilde[2] = detail::mat2(0, i, -i, 0);
    p.sigma_tilde[3] = detail::mat2(-1, 0, 0, 1);
    p.epsilon = {1.0, -1.0, -1.0, -1.0};
    return p;
  }();
  return set;
}

inline const Mat4R& minkowski_metric() {
  static const Mat4R g = [] {
    Mat4R m;
    m(0, 0) = 1.0;
    m(1, 1) = -1.0;
    m(2, 2) = -1.0;
    m(3, 3) = -1.0;
    return m;
  }();
  return g;
}

// Element of SL(2, C): 2x2 complex with unit determinant.
struct SL2Element {
  Mat2C m;
};

inline SL2Element make_sl2(const Mat2C& m, double tol = kEpsFloat) {
  if (!is_finite(m)) throw DomainError("make_sl2: non-finite entries");
  if (std::abs(det(m) - cplx(1.0, 0.0)) > tol)
    throw DomainError("make_sl2: determinant is not 1");
  return SL2Element{m};
}

// The covering map onto the special orthochronous Lorentz group, written out
// as the sixteen quadratic component expressions.  Entry (k, m) is the
// coefficient of the image matrix in row k, column m.  Each expression is
// real up to rounding; a larger imaginary residue signals a transcription
// bug, not bad input.
inline Mat4R phi(const SL2Element& s, double tol = kEpsFloat) {
  const cplx a = s.m(0, 0);
  const cplx b = s.m(0, 1);
  const cplx c = s.m(1, 0);
  const cplx d = s.m(1, 1);
  const cplx ca = std::conj(a);
  const cplx cb = std::conj(b);
  const cplx cc = std::conj(c);
  const cplx cd = std::conj(d);

  const cplx half(0.5, 0.0);
  const cplx half_over_i(0.0, -0.5);  // z / (2i)

  std::array<cplx, 16> v;
  v[0] = half * (ca * a + cb * b + cc * c + cd * d);
  v[1] = half * (ca * b + cb * a + cc * d + cd * c);
  v[2] = half_over_i * (cb * a - ca * b + cd * c - cc * d);
  v[3] = half * (ca * a - cb * b + cc * c - cd * d);

  v[4] = half * (cc * a + ca * c + cd * b + cb * d);
  v[5] = half * (cc * b + cb * c + cd * a + ca * d);
  v[6] = half_over_i * (cb * c - cc * b + cd * a - ca * d);
  v[7] = half * (cc * a + ca * c - cd * b - cb * d);

  v[8] = half_over_i * (ca * c - cc * a + cb * d - cd * b);
  v[9] = half_over_i * (cb * c - cc * b + ca * d - cd * a);
  v[10] = half * (cd * a + ca * d - cc * b - cb * c);
  v[11] = half_over_i * (ca * c - cc * a + cd * b - cb * d);

  v[12] = half * (ca * a + cb * b - cc * c - cd * d);
  v[13] = half * (ca * b + cb * a - cc * d - cd * c);
  v[14] = half_over_i * (cb * a - ca * b + cc * d - cd * c);
  v[15] = half * (ca * a + cd * d - cc * c - cb * b);

  Mat4R out;
  for (std::size_t k = 0; k < 16; ++k) {
    if (std::abs(v[k].imag()) > tol)
      throw InternalError("phi: component has an imaginary residue");
    out.data()[k] = v[k].real();
  }
  return out;
}

// Independent route to the same map: conjugate each sigma_m and read the
// image column off in the sigma basis.  Under <A, B> = tr(A^dagger B) / 2
// the sigma matrices are orthonormal, so the coefficient extraction is a
// plain trace pairing.
inline Mat4R phi_via_sigma(const SL2Element& s, double tol = kEpsFloat) {
  const PauliSet& p = pauli_set();
  const Mat2C s_dag = adjoint(s.m);
  Mat4R out;
  for (std::size_t m = 0; m < 4; ++m) {
    const Mat2C v = s.m * p.sigma[m] * s_dag;
    for (std::size_t k = 0; k < 4; ++k) {
      const cplx coef = 0.5 * trace(adjoint(p.sigma[k]) * v);
      if (std::abs(coef.imag()) > tol)
        throw InternalError("phi_via_sigma: non-real coefficient");
      out(k, m) = coef.real();
    }
  }
  return out;
}

// Residual of the dual-basis transformation law
//   (S^{-1})^dagger sigma~_m S^{-1} = sum_k phi(S)^k_m sigma~_k.
inline double sigma_dual_residual(const SL2Element& s) {
  const PauliSet& p = pauli_set();
  const Mat4R img = phi(s);
  const Mat2C inv = inv2_unit_det(s.m);
  const Mat2C inv_dag = adjoint(inv);
  double worst = 0.0;
  for (std::size_t m = 0; m < 4; ++m) {
    const Mat2C lhs = inv_dag * p.sigma_tilde[m] * inv;
    Mat2C rhs;
    for (std::size_t k = 0; k < 4; ++k)
      rhs = rhs + cplx(img(k, m), 0.0) * p.sigma_tilde[k];
    worst = std::max(worst, max_abs_diff(lhs, rhs));
  }
  return worst;
}

// Deterministic sample: complex-normal entries, redrawn while the
// determinant is tiny, then scaled by a principal square root of the
// determinant so det = 1 up to rounding.  The branch ambiguity of the root
// is harmless because phi(-S) = phi(S).
inline SL2Element sample_sl2(std::uint64_t seed) {
  SeededRng rng(seed);
  Mat2C m;
  cplx d;
  do {
    for (std::size_t k = 0; k < 4; ++k) m.data()[k] = rng.complex_normal();
    d = det(m);
  } while (std::abs(d) < 1e-6);
  const cplx root = std::sqrt(d);
  const cplx scale = cplx(1.0, 0.0) / root;
  return SL2Element{scale * m};
}

}  // namespace pin13
