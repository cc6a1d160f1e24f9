#pragma once

#include <algorithm>
#include <cstddef>
#include <utility>
#include <vector>

#include "pin13/lorentz.hpp"
#include "pin13/matrix.hpp"
#include "pin13/sl2c.hpp"

namespace pin13 {

namespace detail {

inline Mat4C block_diag(const Mat2C& top_left, const Mat2C& bottom_right) {
  Mat4C m;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) {
      m(i, j) = top_left(i, j);
      m(i + 2, j + 2) = bottom_right(i, j);
    }
  return m;
}

inline Mat4C block_antidiag(const Mat2C& top_right,
                            const Mat2C& bottom_left) {
  Mat4C m;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) {
      m(i, j + 2) = top_right(i, j);
      m(i + 2, j) = bottom_left(i, j);
    }
  return m;
}

inline Mat2C top_left(const Mat4C& m) {
  Mat2C b;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) b(i, j) = m(i, j);
  return b;
}

inline Mat2C top_right(const Mat4C& m) {
  Mat2C b;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) b(i, j) = m(i, j + 2);
  return b;
}

inline Mat2C bottom_left(const Mat4C& m) {
  Mat2C b;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) b(i, j) = m(i + 2, j);
  return b;
}

inline Mat2C bottom_right(const Mat4C& m) {
  Mat2C b;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) b(i, j) = m(i + 2, j + 2);
  return b;
}

// Basis of the nullspace of a small dense real system, by column-scanned
// partial-pivot Gauss-Jordan elimination.  `a` is rows x cols, row major.
inline std::vector<std::vector<double>> real_nullspace(std::vector<double> a,
                                                       std::size_t rows,
                                                       std::size_t cols,
                                                       double threshold) {
  std::vector<std::size_t> pivot_col;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t best = rank;
    double best_abs = std::abs(a[rank * cols + c]);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      const double v = std::abs(a[r * cols + c]);
      if (v > best_abs) {
        best = r;
        best_abs = v;
      }
    }
    if (best_abs <= threshold) continue;  // free column
    if (best != rank)
      for (std::size_t k = 0; k < cols; ++k)
        std::swap(a[best * cols + k], a[rank * cols + k]);
    const double inv_pivot = 1.0 / a[rank * cols + c];
    for (std::size_t k = 0; k < cols; ++k) a[rank * cols + k] *= inv_pivot;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank) continue;
      const double f = a[r * cols + c];
      if (f == 0.0) continue;
      for (std::size_t k = 0; k < cols; ++k)
        a[r * cols + k] -= f * a[rank * cols + k];
    }
    pivot_col.push_back(c);
    ++rank;
  }

  std::vector<bool> is_pivot(cols, false);
  for (std::size_t c : pivot_col) is_pivot[c] = true;

  std::vector<std::vector<double>> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<double> x(cols, 0.0);
    x[f] = 1.0;
    for (std::size_t r = 0; r < rank; ++r) x[pivot_col[r]] = -a[r * cols + f];
    basis.push_back(std::move(x));
  }
  return basis;
}

// Gauss-Jordan inverse of a small dense complex matrix (row major).
inline std::vector<cplx> invert_complex(std::vector<cplx> a, std::size_t n) {
  std::vector<cplx> inv(n * n, cplx{});
  for (std::size_t i = 0; i < n; ++i) inv[i * n + i] = 1.0;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t best = c;
    double best_abs = std::abs(a[c * n + c]);
    for (std::size_t r = c + 1; r < n; ++r) {
      const double v = std::abs(a[r * n + c]);
      if (v > best_abs) {
        best = r;
        best_abs = v;
      }
    }
    if (best_abs < 1e-12)
      throw InternalError("invert_complex: singular matrix");
    if (best != c)
      for (std::size_t k = 0; k < n; ++k) {
        std::swap(a[best * n + k], a[c * n + k]);
        std::swap(inv[best * n + k], inv[c * n + k]);
      }
    const cplx inv_pivot = cplx(1.0, 0.0) / a[c * n + c];
    for (std::size_t k = 0; k < n; ++k) {
      a[c * n + k] *= inv_pivot;
      inv[c * n + k] *= inv_pivot;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c) continue;
      const cplx f = a[r * n + c];
      if (f == cplx{}) continue;
      for (std::size_t k = 0; k < n; ++k) {
        a[r * n + k] -= f * a[c * n + k];
        inv[r * n + k] -= f * inv[c * n + k];
      }
    }
  }
  return inv;
}

}  // namespace detail

// The four gamma matrices, built block-antidiagonally from the sigma pair,
// and the sixteen independent products that span all complex 4x4 matrices.
// Order of basis16: 1, g0g1g2g3, g0, g1g2g3, g1, g0g2g3, g2, g0g1g3,
//                   g3, g0g1g2, g0g1, g2g3, g0g2, g1g3, g0g3, g1g2.
struct GammaSet {
  std::array<Mat4C, 4> gamma;
  std::array<Mat4C, 16> basis16;
};

// basis16 positions of gamma_0..gamma_3.
inline constexpr std::array<std::size_t, 4> kGammaSlot = {2, 4, 6, 8};

inline const GammaSet& gamma_set() {
  static const GammaSet set = [] {
    const PauliSet& p = pauli_set();
    GammaSet g;
    for (std::size_t m = 0; m < 4; ++m)
      g.gamma[m] = detail::block_antidiag(p.sigma[m], p.sigma_tilde[m]);

    // The anticommutation relation holds exactly for these entries; any
    // deviation is a construction bug.
    const Mat4R& metric = minkowski_metric();
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) {
        const Mat4C anti = g.gamma[i] * g.gamma[j] + g.gamma[j] * g.gamma[i];
        const Mat4C expect =
            cplx(2.0 * metric(i, j), 0.0) * Mat4C::identity();
        if (max_abs_diff(anti, expect) != 0.0)
          throw InternalError("gamma_set: anticommutation relation failed");
      }

    const auto& ga = g.gamma;
    g.basis16[0] = Mat4C::identity();
    g.basis16[1] = ga[0] * ga[1] * ga[2] * ga[3];
    g.basis16[2] = ga[0];
    g.basis16[3] = ga[1] * ga[2] * ga[3];
    g.basis16[4] = ga[1];
    g.basis16[5] = ga[0] * ga[2] * ga[3];
    g.basis16[6] = ga[2];
    g.basis16[7] = ga[0] * ga[1] * ga[3];
    g.basis16[8] = ga[3];
    g.basis16[9] = ga[0] * ga[1] * ga[2];
    g.basis16[10] = ga[0] * ga[1];
    g.basis16[11] = ga[2] * ga[3];
    g.basis16[12] = ga[0] * ga[2];
    g.basis16[13] = ga[1] * ga[3];
    g.basis16[14] = ga[0] * ga[3];
    g.basis16[15] = ga[1] * ga[2];
    return g;
  }();
  return set;
}

namespace detail {

struct Basis16Pairing {
  std::array<cplx, 16 * 16> gram;
  std::array<cplx, 16 * 16> gram_inverse;
  double gram_det_abs;
};

inline const Basis16Pairing& basis16_pairing() {
  static const Basis16Pairing pairing = [] {
    const GammaSet& g = gamma_set();
    Basis16Pairing p{};
    std::vector<cplx> gram(16 * 16);
    for (std::size_t i = 0; i < 16; ++i)
      for (std::size_t j = 0; j < 16; ++j)
        gram[i * 16 + j] =
            0.25 * trace(adjoint(g.basis16[i]) * g.basis16[j]);
    // |det| via elimination; doubles as the rank-16 certificate.
    std::vector<cplx> work = gram;
    double log_abs_det = 0.0;
    for (std::size_t c = 0; c < 16; ++c) {
      std::size_t best = c;
      double best_abs = std::abs(work[c * 16 + c]);
      for (std::size_t r = c + 1; r < 16; ++r)
        if (std::abs(work[r * 16 + c]) > best_abs) {
          best = r;
          best_abs = std::abs(work[r * 16 + c]);
        }
      if (best_abs < 1e-12) {
        log_abs_det = -1e9;
        break;
      }
      if (best != c)
        for (std::size_t k = 0; k < 16; ++k)
          std::swap(work[best * 16 + k], work[c * 16 + k]);
      log_abs_det += std::log(best_abs);
      const cplx inv_pivot = cplx(1.0, 0.0) / work[c * 16 + c];
      for (std::size_t r = c + 1; r < 16; ++r) {
        const cplx f = work[r * 16 + c] * inv_pivot;
        for (std::size_t k = c; k < 16; ++k)
          work[r * 16 + k] -= f * work[c * 16 + k];
      }
    }
    p.gram_det_abs = std::exp(log_abs_det);
    if (p.gram_det_abs < 1e-6)
      throw InternalError("basis16: Gram matrix is singular");
    const std::vector<cplx> inv = invert_complex(gram, 16);
    for (std::size_t k = 0; k < 16 * 16; ++k) {
      p.gram[k] = gram[k];
      p.gram_inverse[k] = inv[k];
    }
    return p;
  }();
  return pairing;
}

}  // namespace detail

inline double basis16_gram_det_abs() {
  return detail::basis16_pairing().gram_det_abs;
}

// Coefficients c with M = sum_i c_i basis16_i, via the trace pairing
// <A, B> = tr(A^dagger B) / 4 and the (startup-verified) Gram inverse.
inline std::array<cplx, 16> decompose_in_basis16(const Mat4C& m) {
  const GammaSet& g = gamma_set();
  const detail::Basis16Pairing& p = detail::basis16_pairing();
  std::array<cplx, 16> rhs;
  for (std::size_t i = 0; i < 16; ++i)
    rhs[i] = 0.25 * trace(adjoint(g.basis16[i]) * m);
  std::array<cplx, 16> c{};
  for (std::size_t i = 0; i < 16; ++i) {
    cplx acc{};
    for (std::size_t j = 0; j < 16; ++j)
      acc += p.gram_inverse[i * 16 + j] * rhs[j];
    c[i] = acc;
  }
  return c;
}

// Solves X gamma_m = sum_k target^k_m gamma_k X (m = 0..3) for the unknown
// 4x4 matrix X: 64 complex homogeneous equations in 16 complex unknowns,
// eliminated as a 128x32 real system.  The solution line must be complex
// one-dimensional; its representative is returned scaled so the largest
// entry is 1.
inline Mat4C solve_inversion_equation(const Mat4R& target) {
  const GammaSet& g = gamma_set();

  std::array<Mat4C, 4> weighted;  // sum_k target^k_m gamma_k
  for (std::size_t m = 0; m < 4; ++m) {
    Mat4C acc;
    for (std::size_t k = 0; k < 4; ++k)
      acc = acc + cplx(target(k, m), 0.0) * g.gamma[k];
    weighted[m] = acc;
  }

  constexpr std::size_t kRows = 128, kCols = 32;
  std::vector<double> a(kRows * kCols, 0.0);
  std::size_t eq = 0;
  for (std::size_t m = 0; m < 4; ++m)
    for (std::size_t r = 0; r < 4; ++r)
      for (std::size_t c = 0; c < 4; ++c, ++eq)
        for (std::size_t p = 0; p < 4; ++p)
          for (std::size_t q = 0; q < 4; ++q) {
            cplx coef{};
            if (p == r) coef += g.gamma[m](q, c);
            if (q == c) coef -= weighted[m](r, p);
            if (coef == cplx{}) continue;
            const std::size_t u = p * 4 + q;
            // x = [Re X | Im X]; each complex equation splits in two.
            a[(2 * eq) * kCols + u] += coef.real();
            a[(2 * eq) * kCols + 16 + u] += -coef.imag();
            a[(2 * eq + 1) * kCols + u] += coef.imag();
            a[(2 * eq + 1) * kCols + 16 + u] += coef.real();
          }

  const auto basis = detail::real_nullspace(std::move(a), kRows, kCols, 1e-10);
  if (basis.size() != 2)
    throw InternalError(
        "inversion system: nullspace complex dimension is not 1");

  const auto reassemble = [](const std::vector<double>& v) {
    Mat4C m;
    for (std::size_t k = 0; k < 16; ++k) m.data()[k] = cplx(v[k], v[16 + k]);
    return m;
  };
  Mat4C first = reassemble(basis[0]);
  const Mat4C second = reassemble(basis[1]);

  std::size_t lead = 0;
  for (std::size_t k = 1; k < 16; ++k)
    if (std::abs(first.data()[k]) > std::abs(first.data()[lead])) lead = k;
  const cplx ratio = second.data()[lead] / first.data()[lead];
  if (max_abs_diff(second, ratio * first) > 1e-9 * std::max(1.0, max_abs(second)))
    throw InternalError("inversion system: null directions span two lines");

  return (cplx(1.0, 0.0) / first.data()[lead]) * first;
}

// Rescales a solution-line representative to the square root of the
// identity it spans, oriented so the first nonzero entry has argument in
// [-pi/2, pi/2), then applies the requested overall sign.
inline Mat4C normalize_inversion(const Mat4C& basisvec, int sign) {
  const Mat4C square = basisvec * basisvec;
  const cplx mu = 0.25 * trace(square);
  if (std::abs(mu) < 1e-12 ||
      max_abs_diff(square, mu * Mat4C::identity()) >
          1e-9 * std::max(1.0, std::abs(mu)))
    throw DomainError(
        "normalize_inversion: square is not a nonzero multiple of I");
  Mat4C x = (cplx(1.0, 0.0) / std::sqrt(mu)) * basisvec;

  const double scale = max_abs(x);
  for (const cplx& entry : x.data()) {
    if (std::abs(entry) <= 1e-8 * scale) continue;
    const bool flip = entry.real() < -1e-12 ||
                      (std::abs(entry.real()) <= 1e-12 && entry.imag() > 0.0);
    if (flip) x = -x;
    break;
  }
  if (sign < 0) x = -x;

  if (max_abs_diff(x * x, Mat4C::identity()) > 1e-9)
    throw InternalError("normalize_inversion: result does not square to I");
  return x;
}

// Discrete generators of the group extension: P_hat, T_hat and their
// product Q_hat.  Both lines are derived by the nullspace solver at startup
// and checked against the gamma products, which are then stored exactly so
// the zero-tolerance identities downstream stay exact.
struct InversionOps {
  Mat4C p_hat;
  Mat4C t_hat;
  Mat4C q_hat;
};

inline const InversionOps& inversion_ops() {
  static const InversionOps ops = [] {
    const GammaSet& g = gamma_set();
    const Mat4C p_derived =
        normalize_inversion(solve_inversion_equation(spatial_inversion()), +1);
    const Mat4C t_derived =
        normalize_inversion(solve_inversion_equation(time_inversion()), +1);
    if (max_abs_diff(p_derived, g.basis16[2]) > 1e-12 ||
        max_abs_diff(t_derived, g.basis16[3]) > 1e-12)
      throw InternalError("inversion_ops: derived lines disagree with the "
                          "gamma products");
    InversionOps ops{g.basis16[2], g.basis16[3], g.basis16[2] * g.basis16[3]};
    if (max_abs_diff(ops.q_hat, g.basis16[1]) != 0.0)
      throw InternalError("inversion_ops: q_hat is not the full gamma product");
    return ops;
  }();
  return ops;
}

inline const Mat4C& sector_hat_factor(SectorTag tag) {
  static const Mat4C ident = Mat4C::identity();
  const InversionOps& ops = inversion_ops();
  switch (tag) {
    case SectorTag::Proper: return ident;
    case SectorTag::PSector: return ops.p_hat;
    case SectorTag::TSector: return ops.t_hat;
    case SectorTag::MinusSector: return ops.q_hat;
  }
  return ident;
}

// Inverse of a group-representation matrix.  Every element is either
// block-diagonal (proper and PT sectors) or block-antidiagonal (P and T
// sectors); anything else lies outside the group.
inline Mat4C pin_inverse(const Mat4C& m, double tol = kEpsFloat) {
  const double scale = max_abs(m);
  if (scale == 0.0 || !is_finite(m))
    throw DomainError("pin_inverse: not an invertible group element");
  const double structural = tol * std::max(1.0, scale);

  double diag_mass = 0.0, anti_mass = 0.0;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      const double v = std::abs(m(i, j));
      if ((i < 2) == (j < 2))
        diag_mass = std::max(diag_mass, v);
      else
        anti_mass = std::max(anti_mass, v);
    }

  if (anti_mass <= structural) {
    return detail::block_diag(inv2(detail::top_left(m)),
                              inv2(detail::bottom_right(m)));
  }
  if (diag_mass <= structural) {
    return detail::block_antidiag(inv2(detail::bottom_left(m)),
                                  inv2(detail::top_right(m)));
  }
  throw DomainError("pin_inverse: not in the Pin(1,3) representation");
}

// The covering homomorphism onto the full Lorentz group: conjugate each
// gamma_m and read the image column out of the gamma span.  Conjugation
// must stay inside the real span of gamma_0..gamma_3.
inline LorentzElement big_phi(const Mat4C& m, double tol = kEpsFloat) {
  const Mat4C inv = pin_inverse(m, tol);
  const GammaSet& g = gamma_set();
  Mat4R image;
  for (std::size_t col = 0; col < 4; ++col) {
    const Mat4C conj = m * g.gamma[col] * inv;
    const std::array<cplx, 16> coef = decompose_in_basis16(conj);
    const double residual_tol = tol * std::max(1.0, max_abs(conj));
    for (std::size_t i = 0; i < 16; ++i) {
      const bool is_gamma = i == kGammaSlot[0] || i == kGammaSlot[1] ||
                            i == kGammaSlot[2] || i == kGammaSlot[3];
      if (!is_gamma && std::abs(coef[i]) > residual_tol)
        throw DomainError("big_phi: not in the Pin(1,3) representation");
    }
    for (std::size_t k = 0; k < 4; ++k) {
      const cplx c = coef[kGammaSlot[k]];
      if (std::abs(c.imag()) > residual_tol)
        throw DomainError("big_phi: not in the Pin(1,3) representation");
      image(k, col) = c.real();
    }
  }
  return decompose(image, tol);
}

// Group element together with its cached image and sector.
struct PinElement {
  Mat4C m;
  SectorTag sector;
  LorentzElement image;
};

inline PinElement make_pin(const Mat4C& m, double tol = kEpsFloat) {
  LorentzElement image = big_phi(m, tol);
  const SectorTag sector = image.tag;
  return PinElement{m, sector, std::move(image)};
}

// Block-diagonal embedding of SL(2, C): S -> diag(S, (S^{-1})^dagger).
inline PinElement embed_sl2(const SL2Element& s) {
  const Mat4C m =
      detail::block_diag(s.m, adjoint(inv2_unit_det(s.m)));
  const Mat4R proper = phi(s);
  return PinElement{m, SectorTag::Proper,
                    LorentzElement{proper, SectorTag::Proper, proper}};
}

inline PinElement pin_mul(const PinElement& a, const PinElement& b,
                          double tol = kEpsFloat) {
  return make_pin(a.m * b.m, tol);
}

namespace detail {

struct Quaternion {
  double w, x, y, z;
};

// Largest-component branch extraction from a 3x3 rotation block.
inline Quaternion quaternion_from_rotation(const Mat4R& lor) {
  const auto r = [&lor](std::size_t i, std::size_t j) {
    return lor(i + 1, j + 1);
  };
  Quaternion q{};
  const double tr = r(0, 0) + r(1, 1) + r(2, 2);
  if (tr > 0.0) {
    const double s = std::sqrt(tr + 1.0) * 2.0;
    q.w = 0.25 * s;
    q.x = (r(2, 1) - r(1, 2)) / s;
    q.y = (r(0, 2) - r(2, 0)) / s;
    q.z = (r(1, 0) - r(0, 1)) / s;
  } else if (r(0, 0) >= r(1, 1) && r(0, 0) >= r(2, 2)) {
    const double s = std::sqrt(1.0 + r(0, 0) - r(1, 1) - r(2, 2)) * 2.0;
    q.w = (r(2, 1) - r(1, 2)) / s;
    q.x = 0.25 * s;
    q.y = (r(0, 1) + r(1, 0)) / s;
    q.z = (r(0, 2) + r(2, 0)) / s;
  } else if (r(1, 1) >= r(2, 2)) {
    const double s = std::sqrt(1.0 + r(1, 1) - r(0, 0) - r(2, 2)) * 2.0;
    q.w = (r(0, 2) - r(2, 0)) / s;
    q.x = (r(0, 1) + r(1, 0)) / s;
    q.y = 0.25 * s;
    q.z = (r(1, 2) + r(2, 1)) / s;
  } else {
    const double s = std::sqrt(1.0 + r(2, 2) - r(0, 0) - r(1, 1)) * 2.0;
    q.w = (r(1, 0) - r(0, 1)) / s;
    q.x = (r(0, 2) + r(2, 0)) / s;
    q.y = (r(1, 2) + r(2, 1)) / s;
    q.z = 0.25 * s;
  }
  const double n =
      std::sqrt(q.w * q.w + q.x * q.x + q.y * q.y + q.z * q.z);
  q.w /= n;
  q.x /= n;
  q.y /= n;
  q.z /= n;
  return q;
}

}  // namespace detail

// Constructive section of the covering map on the proper sector.  The
// Hermitian square S S^dagger is read off the image's first column in the
// sigma basis; its positive square root fixes the boost factor and the
// residual spatial rotation is lifted through quaternion extraction.
// The result satisfies phi(result) = s up to rounding; the overall sign is
// one of the two valid lifts.
inline SL2Element sl2_from_proper(const Mat4R& s) {
  const PauliSet& p = pauli_set();
  Mat2C h;
  for (std::size_t k = 0; k < 4; ++k)
    h = h + cplx(s(k, 0), 0.0) * p.sigma[k];

  // (h + I) / sqrt(tr h + 2) is the Hermitian square root of h when
  // det h = 1.
  const double tr_h = 2.0 * s(0, 0);
  const cplx root_scale(1.0 / std::sqrt(tr_h + 2.0), 0.0);
  const Mat2C boost = root_scale * (h + Mat2C::identity());

  const Mat4R rotation =
      phi(SL2Element{inv2_unit_det(boost)}) * s;
  const detail::Quaternion q = detail::quaternion_from_rotation(rotation);
  Mat2C unitary;
  unitary(0, 0) = cplx(q.w, -q.z);
  unitary(0, 1) = cplx(-q.y, -q.x);
  unitary(1, 0) = cplx(q.y, -q.x);
  unitary(1, 1) = cplx(q.w, q.z);

  return make_sl2(boost * unitary, 1e-6);
}

// The two lifts of a full-group element; exact negatives of each other.
inline std::pair<PinElement, PinElement> preimage(const LorentzElement& l) {
  const SL2Element lifted = sl2_from_proper(l.proper_part);
  const Mat4C m = sector_hat_factor(l.tag) * embed_sl2(lifted).m;
  PinElement plus = make_pin(m);
  const double scale = std::max(1.0, max_abs(l.m));
  if (max_abs_diff(plus.image.m, l.m) > std::max(kEpsFloat * scale, 1e-8))
    throw InternalError("preimage: reconstruction residual too large");
  PinElement minus{-m, plus.sector, plus.image};
  return {std::move(plus), std::move(minus)};
}

}  // namespace pin13
