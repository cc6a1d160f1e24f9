#include <catch2/catch.hpp>

#include "pin13/dirac.hpp"
#include "pin13/matrix.hpp"
#include "pin13/rng.hpp"
#include "pin13/sl2c.hpp"

using namespace pin13;

namespace {

Mat2C mat2(cplx a, cplx b, cplx c, cplx d) {
  Mat2C m;
  m(0, 0) = a;
  m(0, 1) = b;
  m(1, 0) = c;
  m(1, 1) = d;
  return m;
}

// Entries from the Gaussian integers {-2..2} + {-2..2}i are exactly
// representable, as are their products and small sums.
Mat2C random_gaussian_int(SeededRng& rng) {
  Mat2C m;
  for (cplx& v : m.data())
    v = cplx(static_cast<double>(rng.next_u64() % 5) - 2.0,
             static_cast<double>(rng.next_u64() % 5) - 2.0);
  return m;
}

}  // namespace

TEST_CASE("approx_eq compares entrywise against a tolerance") {
  const Mat4C id = Mat4C::identity();
  REQUIRE(approx_eq(id, id, 0.0));

  const Mat4C gamma0 = gamma_set().gamma[0];
  Mat4C perturbed = gamma0;
  perturbed(0, 0) += cplx(1e-12, 0.0);
  REQUIRE(approx_eq(gamma0, perturbed, 1e-9));
  REQUIRE_FALSE(approx_eq(gamma0, gamma_set().gamma[1], 1e-9));
}

TEST_CASE("inv2_unit_det inverts unit-determinant matrices") {
  REQUIRE(max_abs_diff(inv2_unit_det(Mat2C::identity()), Mat2C::identity()) ==
          0.0);

  const Mat2C shear = mat2(1, 1, 0, 1);
  REQUIRE(max_abs_diff(inv2_unit_det(shear), mat2(1, -1, 0, 1)) == 0.0);

  const Mat2C squeeze = mat2(2, 0, 0, 0.5);
  REQUIRE(max_abs_diff(inv2_unit_det(squeeze), mat2(0.5, 0, 0, 2)) == 0.0);

  REQUIRE_THROWS_AS(inv2_unit_det(mat2(2, 0, 0, 1)), DomainError);
}

TEST_CASE("inv2_unit_det left-inverts 500 sampled unit-determinant matrices") {
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    const Mat2C a = sample_sl2(seed).m;
    REQUIRE(max_abs_diff(inv2_unit_det(a) * a, Mat2C::identity()) <= 1e-9);
  }
}

TEST_CASE("the adjugate map on fixed points and the dual sigma") {
  REQUIRE(max_abs_diff(l_map(Mat2C::identity()), Mat2C::identity()) == 0.0);
  REQUIRE(max_abs_diff(l_map(Mat2C{}), Mat2C{}) == 0.0);

  const PauliSet& p = pauli_set();
  REQUIRE(max_abs_diff(l_map(p.sigma[1]), mat2(0, -1, -1, 0)) == 0.0);
  for (std::size_t m = 0; m < 4; ++m)
    REQUIRE(max_abs_diff(l_map(p.sigma[m]), p.sigma_tilde[m]) == 0.0);
}

TEST_CASE("the adjugate map is linear, exactly on exact inputs") {
  SeededRng rng(21);
  for (int i = 0; i < 200; ++i) {
    const Mat2C a = random_gaussian_int(rng);
    const Mat2C b = random_gaussian_int(rng);
    const cplx alpha(static_cast<double>(rng.next_u64() % 5) - 2.0,
                     static_cast<double>(rng.next_u64() % 5) - 2.0);
    const cplx beta(static_cast<double>(rng.next_u64() % 5) - 2.0,
                    static_cast<double>(rng.next_u64() % 5) - 2.0);
    REQUIRE(max_abs_diff(l_map(alpha * a + beta * b),
                         alpha * l_map(a) + beta * l_map(b)) == 0.0);
  }
}

TEST_CASE("A^{-1} = det(A) L(A) for 500 determinant +-1 samples") {
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    Mat2C a = sample_sl2(seed).m;
    if (seed % 2 == 1) {
      // flip one column: det -> -1
      a(0, 0) = -a(0, 0);
      a(1, 0) = -a(1, 0);
    }
    const cplx d = det(a);
    const Mat2C inverse = d * l_map(a);
    REQUIRE(max_abs_diff(inverse * a, Mat2C::identity()) <= 1e-9);
  }
}

TEST_CASE("4x4 real determinant on known matrices") {
  REQUIRE(det(Mat4R::identity()) == 1.0);
  REQUIRE(det(spatial_inversion()) == -1.0);
  REQUIRE(det(time_inversion()) == -1.0);
  REQUIRE(det(-Mat4R::identity()) == 1.0);
  REQUIRE(det(minkowski_metric()) == -1.0);
}
