#pragma once

#include <algorithm>
#include <cstddef>
#include <vector>

#include "pin13/dirac.hpp"
#include "pin13/matrix.hpp"

namespace pin13 {

// Index budget: 4^6 components at most, desk scale by construction.
inline constexpr int kMaxTensorIndices = 6;

// Counts of the six index groups, in storage order: contravariant Dirac,
// covariant Dirac, barred contravariant, barred covariant, tangent,
// cotangent.  Dirac and tangent indices both run over four values.
struct SpinTensorType {
  int alpha = 0;    // contravariant Dirac
  int beta = 0;     // covariant Dirac
  int nu = 0;       // barred contravariant
  int gamma_b = 0;  // barred covariant
  int m = 0;        // tangent
  int n = 0;        // cotangent

  int total() const { return alpha + beta + nu + gamma_b + m + n; }

  friend bool operator==(const SpinTensorType&, const SpinTensorType&) =
      default;
};

inline SpinTensorType make_tensor_type(int alpha, int beta, int nu,
                                       int gamma_b, int m, int n) {
  const SpinTensorType t{alpha, beta, nu, gamma_b, m, n};
  if (alpha < 0 || beta < 0 || nu < 0 || gamma_b < 0 || m < 0 || n < 0)
    throw DomainError("tensor type: negative index count");
  if (t.total() > kMaxTensorIndices)
    throw DomainError("tensor type: exceeds the index cap");
  return t;
}

inline std::size_t component_count(const SpinTensorType& t) {
  std::size_t c = 1;
  for (int k = 0; k < t.total(); ++k) c *= 4;
  return c;
}

// Dense component array, row major over the concatenated index tuple in
// storage-group order.  Indices are 0-based internally.
struct SpinTensor {
  SpinTensorType type;
  std::vector<cplx> data;

  friend bool operator==(const SpinTensor&, const SpinTensor&) = default;
};

inline SpinTensor make_spin_tensor(const SpinTensorType& type) {
  return SpinTensor{type, std::vector<cplx>(component_count(type), cplx{})};
}

inline SpinTensor make_spin_tensor(const SpinTensorType& type,
                                   std::vector<cplx> data) {
  if (data.size() != component_count(type))
    throw DomainError("spin tensor: component count does not match the type");
  return SpinTensor{type, std::move(data)};
}

// A pair of frame changes, spinor side and tangent side, with explicit
// inverses; s_hat/t_hat and s/t are mutually inverse 4x4 matrices and are
// otherwise arbitrary.
struct FrameTransition {
  Mat4C s_hat;
  Mat4C t_hat;
  Mat4R s;
  Mat4R t;
};

inline FrameTransition make_frame_transition(const Mat4C& s_hat,
                                             const Mat4C& t_hat,
                                             const Mat4R& s, const Mat4R& t,
                                             double tol = kEpsFloat) {
  const double hat_scale =
      std::max(1.0, max_abs(s_hat) * max_abs(t_hat));
  const double scale = std::max(1.0, max_abs(s) * max_abs(t));
  if (max_abs_diff(s_hat * t_hat, Mat4C::identity()) > tol * hat_scale ||
      max_abs_diff(s * t, Mat4R::identity()) > tol * scale)
    throw DomainError("frame transition: matrices are not mutually inverse");
  return FrameTransition{s_hat, t_hat, s, t};
}

inline FrameTransition identity_transition() {
  return FrameTransition{Mat4C::identity(), Mat4C::identity(),
                         Mat4R::identity(), Mat4R::identity()};
}

// Chiral transition: block-diagonal spinor part over the covering image.
inline FrameTransition transition_from_sl2(const SL2Element& s) {
  const Mat2C inv = inv2_unit_det(s.m);
  const Mat4R image = phi(s);
  return FrameTransition{detail::block_diag(s.m, adjoint(inv)),
                         detail::block_diag(inv, adjoint(s.m)), image,
                         lorentz_inverse(image)};
}

// Transition determined by a group-representation matrix alone; the tangent
// part is its covering image.
inline FrameTransition transition_from_pin(const Mat4C& s_hat,
                                           double tol = kEpsFloat) {
  const LorentzElement image = big_phi(s_hat, tol);
  return FrameTransition{s_hat, pin_inverse(s_hat, tol), image.m,
                         lorentz_inverse(image.m)};
}

// first, then: the composite transition equals applying `first` and then
// `then` to components.
inline FrameTransition compose(const FrameTransition& first,
                               const FrameTransition& then) {
  return FrameTransition{first.s_hat * then.s_hat, then.t_hat * first.t_hat,
                         first.s * then.s, then.t * first.t};
}

namespace detail {

enum class SlotKind {
  ContraDirac,
  CovDirac,
  BarredContra,
  BarredCov,
  Tangent,
  Cotangent
};

inline SlotKind slot_of_axis(const SpinTensorType& t, int axis) {
  if (axis < t.alpha) return SlotKind::ContraDirac;
  axis -= t.alpha;
  if (axis < t.beta) return SlotKind::CovDirac;
  axis -= t.beta;
  if (axis < t.nu) return SlotKind::BarredContra;
  axis -= t.nu;
  if (axis < t.gamma_b) return SlotKind::BarredCov;
  axis -= t.gamma_b;
  if (axis < t.m) return SlotKind::Tangent;
  return SlotKind::Cotangent;
}

// Per-slot coefficient matrices for one direction of the transformation
// rule.  Upper (contravariant) slots contract coef(out, summed); lower
// slots contract coef(summed, out).
struct SlotMatrices {
  Mat4C contra_dirac;
  Mat4C cov_dirac;
  Mat4C barred_contra;
  Mat4C barred_cov;
  Mat4C tangent;
  Mat4C cotangent;

  const Mat4C& of(SlotKind k) const {
    switch (k) {
      case SlotKind::ContraDirac: return contra_dirac;
      case SlotKind::CovDirac: return cov_dirac;
      case SlotKind::BarredContra: return barred_contra;
      case SlotKind::BarredCov: return barred_cov;
      case SlotKind::Tangent: return tangent;
      case SlotKind::Cotangent: return cotangent;
    }
    return contra_dirac;
  }
};

inline bool slot_is_upper(SlotKind k) {
  return k == SlotKind::ContraDirac || k == SlotKind::BarredContra ||
         k == SlotKind::Tangent;
}

// Forward rule: new components from old.
inline SlotMatrices forward_slots(const FrameTransition& f) {
  return SlotMatrices{f.t_hat,           f.s_hat,
                      conj_mat(f.t_hat), conj_mat(f.s_hat),
                      to_complex(f.t),   to_complex(f.s)};
}

// Inverse rule: old components from new; same pattern with the matrix
// pairs swapped.
inline SlotMatrices inverse_slots(const FrameTransition& f) {
  return SlotMatrices{f.s_hat,           f.t_hat,
                      conj_mat(f.s_hat), conj_mat(f.t_hat),
                      to_complex(f.s),   to_complex(f.t)};
}

inline void apply_axis(std::vector<cplx>& data, int total_axes, int axis,
                       const Mat4C& coef, bool upper) {
  std::size_t inner = 1;
  for (int k = axis + 1; k < total_axes; ++k) inner *= 4;
  std::size_t outer = 1;
  for (int k = 0; k < axis; ++k) outer *= 4;

  std::array<cplx, 4> scratch;
  for (std::size_t o = 0; o < outer; ++o)
    for (std::size_t in = 0; in < inner; ++in) {
      const std::size_t base = o * 4 * inner + in;
      for (std::size_t a = 0; a < 4; ++a) scratch[a] = data[base + a * inner];
      for (std::size_t i = 0; i < 4; ++i) {
        cplx acc{};
        for (std::size_t a = 0; a < 4; ++a)
          acc += (upper ? coef(i, a) : coef(a, i)) * scratch[a];
        data[base + i * inner] = acc;
      }
    }
}

inline SpinTensor contract_all(const SpinTensor& x, const SlotMatrices& slots) {
  SpinTensor out = x;
  const int total = x.type.total();
  for (int axis = 0; axis < total; ++axis) {
    const SlotKind kind = slot_of_axis(x.type, axis);
    apply_axis(out.data, total, axis, slots.of(kind), slot_is_upper(kind));
  }
  return out;
}

}  // namespace detail

inline SpinTensor transform(const SpinTensor& x, const FrameTransition& f) {
  return detail::contract_all(x, detail::forward_slots(f));
}

inline SpinTensor inverse_transform(const SpinTensor& x,
                                    const FrameTransition& f) {
  return detail::contract_all(x, detail::inverse_slots(f));
}

// Conjugation involution: exchanges the barred and unbarred Dirac index
// groups and conjugates every component.  Involutive exactly.
inline SpinTensor tau(const SpinTensor& x) {
  const SpinTensorType& t = x.type;
  const SpinTensorType out_type{t.nu, t.gamma_b, t.alpha, t.beta, t.m, t.n};
  SpinTensor out = make_spin_tensor(out_type);

  const int total = t.total();
  std::vector<int> digits(static_cast<std::size_t>(total), 0);
  const std::size_t count = component_count(out_type);
  for (std::size_t lin = 0; lin < count; ++lin) {
    std::size_t rest = lin;
    for (int k = total - 1; k >= 0; --k) {
      digits[static_cast<std::size_t>(k)] = static_cast<int>(rest & 3);
      rest >>= 2;
    }
    // Output layout (u[nu], v[gamma_b], w[alpha], x[beta], tangent...) reads
    // the source at (w, x, u, v, tangent...).
    std::size_t src = 0;
    const auto push = [&src](int d) { src = src * 4 + static_cast<std::size_t>(d); };
    const int u0 = 0, v0 = t.nu, w0 = t.nu + t.gamma_b,
              x0 = t.nu + t.gamma_b + t.alpha,
              tan0 = t.nu + t.gamma_b + t.alpha + t.beta;
    for (int k = 0; k < t.alpha; ++k) push(digits[static_cast<std::size_t>(w0 + k)]);
    for (int k = 0; k < t.beta; ++k) push(digits[static_cast<std::size_t>(x0 + k)]);
    for (int k = 0; k < t.nu; ++k) push(digits[static_cast<std::size_t>(u0 + k)]);
    for (int k = 0; k < t.gamma_b; ++k) push(digits[static_cast<std::size_t>(v0 + k)]);
    for (int k = 0; k < t.m + t.n; ++k) push(digits[static_cast<std::size_t>(tan0 + k)]);
    out.data[lin] = std::conj(x.data[src]);
  }
  return out;
}

// The gamma symbols as one component array of type (1,1|0,0|0,1):
// entry (i, j, k) is gamma_k(i, j).
inline SpinTensor gamma_symbol_tensor() {
  SpinTensor out = make_spin_tensor(make_tensor_type(1, 1, 0, 0, 0, 1));
  const GammaSet& g = gamma_set();
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      for (std::size_t k = 0; k < 4; ++k)
        out.data[(i * 4 + j) * 4 + k] = g.gamma[k](i, j);
  return out;
}

// Residual of the gamma-symbol invariance law for the four supported frame
// families.  Chiral transitions use the inverse-matrix slots with sign +1;
// the three reversal generators use the matrices themselves in every slot,
// the convention under which the product generator carries sign -1 (its
// spinor matrix differs from its inverse by that sign).
inline double gamma_symbol_invariance(const FrameTransition& f, int sign,
                                      double tol = kEpsFloat) {
  SectorTag sector;
  try {
    sector = big_phi(f.s_hat, tol).tag;
  } catch (const DomainError&) {
    throw DomainError("gamma_symbol_invariance: unsupported transition");
  }

  Mat4C upper, lower;
  Mat4C tangent;
  if (sector == SectorTag::Proper) {
    if (sign != +1)
      throw DomainError("gamma_symbol_invariance: unsupported transition");
    upper = f.s_hat;
    lower = f.t_hat;
    tangent = to_complex(f.t);
  } else {
    const Mat4C& generator = sector_hat_factor(sector);
    const int expected_sign = sector == SectorTag::MinusSector ? -1 : +1;
    if (max_abs_diff(f.s_hat, generator) > tol || sign != expected_sign)
      throw DomainError("gamma_symbol_invariance: unsupported transition");
    upper = f.s_hat;
    lower = f.s_hat;
    tangent = to_complex(f.s);
  }

  const GammaSet& g = gamma_set();
  const double sgn = static_cast<double>(sign);
  double worst = 0.0;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      for (std::size_t k = 0; k < 4; ++k) {
        cplx acc{};
        for (std::size_t r = 0; r < 4; ++r)
          for (std::size_t s = 0; s < 4; ++s)
            for (std::size_t m = 0; m < 4; ++m)
              acc += upper(i, r) * lower(s, j) * tangent(m, k) *
                     g.gamma[m](r, s);
        worst = std::max(worst, std::abs(g.gamma[k](i, j) - sgn * acc));
      }
  return worst;
}

}  // namespace pin13
