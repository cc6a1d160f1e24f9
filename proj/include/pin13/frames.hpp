#pragma once

#include <algorithm>
#include "pin13/dirac.hpp"
#include "pin13/matrix.hpp"
#include "pin13/spintensor.hpp"

namespace pin13 {

// The three structure fields on the Dirac fiber in the reference frame:
// the skew pairing d (chiral block and its inverse block), the chirality
// involution H, and the Hermitian pairing D of signature (+,+,-,-).
inline const Mat4C& spin_metric() {
  static const Mat4C d = [] {
    Mat4C m;
    m(0, 1) = 1.0;
    m(1, 0) = -1.0;
    m(2, 3) = -1.0;
    m(3, 2) = 1.0;
    return m;
  }();
  return d;
}

inline const Mat4C& chirality_operator() {
  static const Mat4C h = [] {
    Mat4C m;
    m(0, 0) = 1.0;
    m(1, 1) = 1.0;
    m(2, 2) = -1.0;
    m(3, 3) = -1.0;
    return m;
  }();
  return h;
}

inline const Mat4C& dirac_form() {
  static const Mat4C d = [] {
    Mat4C m;
    m(0, 2) = 1.0;
    m(1, 3) = 1.0;
    m(2, 0) = 1.0;
    m(3, 1) = 1.0;
    return m;
  }();
  return d;
}

// Skew pairing of two fiber vectors.
inline cplx pair_d(const Vec4C& x, const Vec4C& y) {
  const Mat4C& d = spin_metric();
  cplx acc{};
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) acc += d(i, j) * x[i] * y[j];
  return acc;
}

inline Vec4C apply_chirality(const Vec4C& x) {
  return Vec4C{x[0], x[1], -x[2], -x[3]};
}

// Hermitian pairing; the second argument is the conjugated slot.
inline cplx pair_D(const Vec4C& x, const Vec4C& y) {
  const Mat4C& d = dirac_form();
  cplx acc{};
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      acc += d(i, j) * x[i] * std::conj(y[j]);
  return acc;
}

struct TransformedFields {
  Mat4C d;
  Mat4C h;
  Mat4C dirac;
};

// Component matrices of the three fields after a frame change: d is twice
// covariant, H mixed, D covariant-sesquilinear.
inline TransformedFields transform_basic_fields(const FrameTransition& f) {
  const Mat4C t_hat_t = transpose(f.t_hat);
  return TransformedFields{
      t_hat_t * spin_metric() * f.t_hat,
      f.s_hat * chirality_operator() * f.t_hat,
      t_hat_t * dirac_form() * conj_mat(f.t_hat)};
}

enum class FrameClass {
  CanonicalChiral,
  PReverseAntiChiral,
  TReverseAntiChiral,
  PTReverseChiral
};

inline const char* to_string(FrameClass c) {
  switch (c) {
    case FrameClass::CanonicalChiral: return "CanonicalChiral";
    case FrameClass::PReverseAntiChiral: return "PReverseAntiChiral";
    case FrameClass::TReverseAntiChiral: return "TReverseAntiChiral";
    case FrameClass::PTReverseChiral: return "PTReverseChiral";
  }
  return "?";
}

struct FrameSigns {
  int d;
  int h;
  int dirac;

  friend bool operator==(const FrameSigns&, const FrameSigns&) = default;
};

struct FrameClassification {
  FrameClass frame_class;
  FrameSigns signs;
  SectorTag sector;
  double residual;  // worst field mismatch against the matched signs
};

namespace detail {

// +1 or -1 if the transformed field equals the original up to that sign,
// with the achieved mismatch written to `residual`.
inline int match_sign(const Mat4C& transformed, const Mat4C& original,
                      double tol, double* residual) {
  const double scale = std::max(1.0, max_abs(transformed));
  const double plus = max_abs_diff(transformed, original);
  const double minus = max_abs_diff(transformed, -original);
  if (plus <= tol * scale) {
    *residual = std::max(*residual, plus);
    return +1;
  }
  if (minus <= tol * scale) {
    *residual = std::max(*residual, minus);
    return -1;
  }
  throw DomainError("classify_frame: transition not in Pin(1,3)");
}

}  // namespace detail

// Classifies a transition by the sign pattern (d, H, D) it induces.  The
// four admissible patterns biject with the four sectors of the covering
// image; anything else is rejected.
inline FrameClassification classify_frame(const FrameTransition& f,
                                          double tol = kEpsFloat) {
  const SectorTag sector = big_phi(f.s_hat, tol).tag;
  const TransformedFields fields = transform_basic_fields(f);

  double residual = 0.0;
  const FrameSigns signs{
      detail::match_sign(fields.d, spin_metric(), tol, &residual),
      detail::match_sign(fields.h, chirality_operator(), tol, &residual),
      detail::match_sign(fields.dirac, dirac_form(), tol, &residual)};

  FrameClass cls;
  if (signs == FrameSigns{+1, +1, +1}) {
    cls = FrameClass::CanonicalChiral;
  } else if (signs == FrameSigns{-1, -1, +1}) {
    cls = FrameClass::PReverseAntiChiral;
  } else if (signs == FrameSigns{+1, -1, -1}) {
    cls = FrameClass::TReverseAntiChiral;
  } else if (signs == FrameSigns{-1, +1, -1}) {
    cls = FrameClass::PTReverseChiral;
  } else {
    throw DomainError("classify_frame: transition not in Pin(1,3)");
  }

  const SectorTag expected =
      cls == FrameClass::CanonicalChiral    ? SectorTag::Proper
      : cls == FrameClass::PReverseAntiChiral ? SectorTag::PSector
      : cls == FrameClass::TReverseAntiChiral ? SectorTag::TSector
                                              : SectorTag::MinusSector;
  if (sector != expected)
    throw InternalError("classify_frame: sign pattern and sector disagree");

  return FrameClassification{cls, signs, sector, residual};
}

enum class ReversalKind { Parity, Time, ParityTime };

// Transition generated by one of the reversal operators, paired with its
// covering image (P, T, -I respectively).
inline FrameTransition make_reversed_frame(ReversalKind kind) {
  const InversionOps& ops = inversion_ops();
  switch (kind) {
    case ReversalKind::Parity:
      return FrameTransition{ops.p_hat, ops.p_hat, spatial_inversion(),
                             spatial_inversion()};
    case ReversalKind::Time:
      return FrameTransition{ops.t_hat, ops.t_hat, time_inversion(),
                             time_inversion()};
    case ReversalKind::ParityTime:
      return FrameTransition{ops.q_hat, -ops.q_hat, -Mat4R::identity(),
                             -Mat4R::identity()};
  }
  throw InternalError("make_reversed_frame: unreachable");
}

// The skew pairing as a twice-covariant component array.
inline SpinTensor spin_metric_tensor() {
  SpinTensor out = make_spin_tensor(make_tensor_type(0, 2, 0, 0, 0, 0));
  const Mat4C& d = spin_metric();
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) out.data[i * 4 + j] = d(i, j);
  return out;
}

}  // namespace pin13
