#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <stdexcept>

namespace pin13 {

using cplx = std::complex<double>;

inline constexpr double kEpsExact = 0.0;
inline constexpr double kEpsFloat = 1e-9;

// eps_exact guards identities whose operands are exactly representable
// (entries in {0, ±1, ±i, ±2, ±2i} and their products); eps_float guards
// identities involving sampled group elements.
struct Tolerance {
  double eps_exact = kEpsExact;
  double eps_float = kEpsFloat;
};

struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InternalError : std::logic_error {
  using std::logic_error::logic_error;
};

// Dense N x N matrix, row major.  The row index is the upper index and the
// column index the lower one, so m(i, j) reads as M^i_j.
template <std::size_t N, typename Scalar>
class SquareMatrix {
 public:
  constexpr SquareMatrix() = default;
  explicit constexpr SquareMatrix(const std::array<Scalar, N * N>& entries)
      : e_(entries) {}

  static constexpr SquareMatrix identity() {
    SquareMatrix m;
    for (std::size_t i = 0; i < N; ++i) m(i, i) = Scalar{1};
    return m;
  }

  constexpr Scalar& operator()(std::size_t row, std::size_t col) {
    return e_[row * N + col];
  }
  constexpr const Scalar& operator()(std::size_t row, std::size_t col) const {
    return e_[row * N + col];
  }

  constexpr const std::array<Scalar, N * N>& data() const { return e_; }
  constexpr std::array<Scalar, N * N>& data() { return e_; }

  friend constexpr SquareMatrix operator+(const SquareMatrix& a,
                                          const SquareMatrix& b) {
    SquareMatrix c;
    for (std::size_t k = 0; k < N * N; ++k) c.e_[k] = a.e_[k] + b.e_[k];
    return c;
  }
  friend constexpr SquareMatrix operator-(const SquareMatrix& a,
                                          const SquareMatrix& b) {
    SquareMatrix c;
    for (std::size_t k = 0; k < N * N; ++k) c.e_[k] = a.e_[k] - b.e_[k];
    return c;
  }
  friend constexpr SquareMatrix operator-(const SquareMatrix& a) {
    SquareMatrix c;
    for (std::size_t k = 0; k < N * N; ++k) c.e_[k] = -a.e_[k];
    return c;
  }
  friend constexpr SquareMatrix operator*(const SquareMatrix& a,
                                          const SquareMatrix& b) {
    SquareMatrix c;
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = 0; j < N; ++j) {
        Scalar acc{};
        for (std::size_t k = 0; k < N; ++k) acc += a(i, k) * b(k, j);
        c(i, j) = acc;
      }
    return c;
  }
  friend constexpr SquareMatrix operator*(const Scalar& s,
                                          const SquareMatrix& a) {
    SquareMatrix c;
    for (std::size_t k = 0; k < N * N; ++k) c.e_[k] = s * a.e_[k];
    return c;
  }
  friend constexpr SquareMatrix operator*(const SquareMatrix& a,
                                          const Scalar& s) {
    return s * a;
  }
  friend constexpr bool operator==(const SquareMatrix& a,
                                   const SquareMatrix& b) {
    return a.e_ == b.e_;
  }

 private:
  std::array<Scalar, N * N> e_{};
};

using Mat2C = SquareMatrix<2, cplx>;
using Mat4C = SquareMatrix<4, cplx>;
using Mat4R = SquareMatrix<4, double>;

using Vec4C = std::array<cplx, 4>;

template <std::size_t N, typename T>
constexpr SquareMatrix<N, T> transpose(const SquareMatrix<N, T>& a) {
  SquareMatrix<N, T> c;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) c(i, j) = a(j, i);
  return c;
}

template <std::size_t N>
constexpr SquareMatrix<N, cplx> conj_mat(const SquareMatrix<N, cplx>& a) {
  SquareMatrix<N, cplx> c;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) c(i, j) = std::conj(a(i, j));
  return c;
}

template <std::size_t N>
constexpr SquareMatrix<N, cplx> adjoint(const SquareMatrix<N, cplx>& a) {
  return transpose(conj_mat(a));
}

template <std::size_t N, typename T>
constexpr T trace(const SquareMatrix<N, T>& a) {
  T acc{};
  for (std::size_t i = 0; i < N; ++i) acc += a(i, i);
  return acc;
}

template <std::size_t N, typename T>
double max_abs(const SquareMatrix<N, T>& a) {
  double m = 0.0;
  for (const T& v : a.data()) m = std::max(m, std::abs(v));
  return m;
}

template <std::size_t N, typename T>
double max_abs_diff(const SquareMatrix<N, T>& a, const SquareMatrix<N, T>& b) {
  double m = 0.0;
  for (std::size_t k = 0; k < N * N; ++k)
    m = std::max(m, std::abs(a.data()[k] - b.data()[k]));
  return m;
}

// True iff the largest entrywise difference is within tol.  Shape agreement
// is enforced by the type system.
template <std::size_t N, typename T>
bool approx_eq(const SquareMatrix<N, T>& a, const SquareMatrix<N, T>& b,
               double tol) {
  return max_abs_diff(a, b) <= tol;
}

template <std::size_t N>
double max_abs_imag(const SquareMatrix<N, cplx>& a) {
  double m = 0.0;
  for (const cplx& v : a.data()) m = std::max(m, std::abs(v.imag()));
  return m;
}

template <std::size_t N>
bool is_finite(const SquareMatrix<N, double>& a) {
  for (double v : a.data())
    if (!std::isfinite(v)) return false;
  return true;
}

template <std::size_t N>
bool is_finite(const SquareMatrix<N, cplx>& a) {
  for (const cplx& v : a.data())
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
  return true;
}

inline Mat4C to_complex(const Mat4R& a) {
  Mat4C c;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) c(i, j) = cplx(a(i, j), 0.0);
  return c;
}

inline Mat4R real_part(const Mat4C& a) {
  Mat4R c;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) c(i, j) = a(i, j).real();
  return c;
}

inline constexpr cplx det(const Mat2C& a) {
  return a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0);
}

// Laplace expansion along the first two rows.
inline constexpr double det(const Mat4R& a) {
  const double s0 = a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0);
  const double s1 = a(0, 0) * a(1, 2) - a(0, 2) * a(1, 0);
  const double s2 = a(0, 0) * a(1, 3) - a(0, 3) * a(1, 0);
  const double s3 = a(0, 1) * a(1, 2) - a(0, 2) * a(1, 1);
  const double s4 = a(0, 1) * a(1, 3) - a(0, 3) * a(1, 1);
  const double s5 = a(0, 2) * a(1, 3) - a(0, 3) * a(1, 2);
  const double c5 = a(2, 2) * a(3, 3) - a(2, 3) * a(3, 2);
  const double c4 = a(2, 1) * a(3, 3) - a(2, 3) * a(3, 1);
  const double c3 = a(2, 1) * a(3, 2) - a(2, 2) * a(3, 1);
  const double c2 = a(2, 0) * a(3, 3) - a(2, 3) * a(3, 0);
  const double c1 = a(2, 0) * a(3, 2) - a(2, 2) * a(3, 0);
  const double c0 = a(2, 0) * a(3, 1) - a(2, 1) * a(3, 0);
  return s0 * c5 - s1 * c4 + s2 * c3 + s3 * c2 - s4 * c1 + s5 * c0;
}

// The linear map A -> L(A) swapping the diagonal and negating the
// off-diagonal of a 2x2 matrix (the adjugate).  A * L(A) = det(A) * I for
// every A, and A^{-1} = det(A) * L(A) whenever det(A) = ±1.
inline constexpr Mat2C l_map(const Mat2C& a) {
  Mat2C c;
  c(0, 0) = a(1, 1);
  c(0, 1) = -a(0, 1);
  c(1, 0) = -a(1, 0);
  c(1, 1) = a(0, 0);
  return c;
}

// Inverse of a 2x2 matrix with unit determinant; rejects anything else.
inline Mat2C inv2_unit_det(const Mat2C& a, double tol = kEpsFloat) {
  if (std::abs(det(a) - cplx(1.0, 0.0)) > tol)
    throw DomainError("inv2_unit_det: not unit determinant");
  return l_map(a);
}

// General 2x2 inverse via the adjugate; only used for block inverses of
// group elements, whose blocks are far from singular.
inline Mat2C inv2(const Mat2C& a) {
  const cplx d = det(a);
  if (std::abs(d) < 1e-12 * std::max(1.0, max_abs(a) * max_abs(a)))
    throw DomainError("inv2: singular 2x2 block");
  const cplx inv_d = cplx(1.0, 0.0) / d;
  return inv_d * l_map(a);
}

inline Vec4C apply(const Mat4C& m, const Vec4C& x) {
  Vec4C y{};
  for (std::size_t i = 0; i < 4; ++i) {
    cplx acc{};
    for (std::size_t j = 0; j < 4; ++j) acc += m(i, j) * x[j];
    y[i] = acc;
  }
  return y;
}

}  // namespace pin13
