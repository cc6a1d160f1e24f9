#pragma once

#include <string>

#include "pin13/matrix.hpp"
#include "pin13/sl2c.hpp"

namespace pin13 {

// Connected component of the full Lorentz group an element lives in,
// determined by (sign of det, sign of the top-left entry):
//   Proper (+, +), PSector (-, +), TSector (-, -), MinusSector (+, -).
enum class SectorTag { Proper, PSector, TSector, MinusSector };

inline const char* to_string(SectorTag t) {
  switch (t) {
    case SectorTag::Proper: return "Proper";
    case SectorTag::PSector: return "PSector";
    case SectorTag::TSector: return "TSector";
    case SectorTag::MinusSector: return "MinusSector";
  }
  return "?";
}

inline const Mat4R& spatial_inversion() {
  static const Mat4R p = [] {
    Mat4R m;
    m(0, 0) = 1.0;
    m(1, 1) = -1.0;
    m(2, 2) = -1.0;
    m(3, 3) = -1.0;
    return m;
  }();
  return p;
}

inline const Mat4R& time_inversion() {
  static const Mat4R t = [] {
    Mat4R m;
    m(0, 0) = -1.0;
    m(1, 1) = 1.0;
    m(2, 2) = 1.0;
    m(3, 3) = 1.0;
    return m;
  }();
  return t;
}

// Factor carried by each sector: I, P, T, -I.  Every full-group element is
// factor(tag) * S with S special orthochronous, and the factor squares to I.
inline const Mat4R& sector_factor(SectorTag tag) {
  static const Mat4R ident = Mat4R::identity();
  static const Mat4R minus = -Mat4R::identity();
  switch (tag) {
    case SectorTag::Proper: return ident;
    case SectorTag::PSector: return spatial_inversion();
    case SectorTag::TSector: return time_inversion();
    case SectorTag::MinusSector: return minus;
  }
  return ident;
}

// Klein four-group structure of the sectors.
inline SectorTag sector_mul(SectorTag a, SectorTag b) {
  const auto bit_p = [](SectorTag t) {
    return t == SectorTag::PSector || t == SectorTag::MinusSector;
  };
  const auto bit_t = [](SectorTag t) {
    return t == SectorTag::TSector || t == SectorTag::MinusSector;
  };
  const bool p = bit_p(a) != bit_p(b);
  const bool t = bit_t(a) != bit_t(b);
  if (p && t) return SectorTag::MinusSector;
  if (p) return SectorTag::PSector;
  if (t) return SectorTag::TSector;
  return SectorTag::Proper;
}

struct LorentzElement {
  Mat4R m;
  SectorTag tag;
  Mat4R proper_part;  // m = sector_factor(tag) * proper_part, exactly
};

inline double metric_residual(const Mat4R& m) {
  return max_abs_diff(transpose(m) * minkowski_metric() * m,
                      minkowski_metric());
}

// Splits a full-group matrix into its sector factor and special
// orthochronous part.  Valid input has |m(0,0)| >= 1, so the time
// orientation is never ambiguous.
inline LorentzElement decompose(const Mat4R& m, double tol = kEpsFloat) {
  if (!is_finite(m)) throw DomainError("decompose: non-finite entries");
  const double scale = std::max(1.0, max_abs(m) * max_abs(m));
  if (metric_residual(m) > tol * scale)
    throw DomainError("decompose: not in O(1,3)");
  const double d = det(m);
  SectorTag tag;
  if (d > 0.0) {
    tag = m(0, 0) > 0.0 ? SectorTag::Proper : SectorTag::MinusSector;
  } else {
    tag = m(0, 0) > 0.0 ? SectorTag::PSector : SectorTag::TSector;
  }
  LorentzElement out{m, tag, sector_factor(tag) * m};
  if (det(out.proper_part) < 0.0 || out.proper_part(0, 0) < 1.0 - tol * scale)
    throw InternalError("decompose: proper part left SO+(1,3)");
  return out;
}

// Product in the full group, reduced to sector arithmetic plus a proper
// part.  sector_factor is involutive, so the proper part of the product is
// just the refactored matrix.
inline LorentzElement mul(const LorentzElement& a, const LorentzElement& b) {
  const Mat4R prod = a.m * b.m;
  const SectorTag tag = sector_mul(a.tag, b.tag);
  return LorentzElement{prod, tag, sector_factor(tag) * prod};
}

// Conjugation by the spatial inversion; an automorphism of SO+(1,3).
inline Mat4R psi(const Mat4R& s) {
  return spatial_inversion() * s * spatial_inversion();
}

// Inverse of any full-group element: L^T g L = g gives L^{-1} = g L^T g.
inline Mat4R lorentz_inverse(const Mat4R& m) {
  return minkowski_metric() * transpose(m) * minkowski_metric();
}

// Companion automorphism of SL(2, C): S -> (S^{-1})^dagger.
inline SL2Element psi_prime(const SL2Element& s) {
  return SL2Element{adjoint(inv2_unit_det(s.m))};
}

}  // namespace pin13
