#include <catch2/catch.hpp>

#include "pin13/dirac.hpp"
#include "pin13/rng.hpp"
#include "pin13/verify.hpp"

using namespace pin13;

TEST_CASE("gamma matrices carry the sigma pair on the antidiagonal blocks") {
  const GammaSet& g = gamma_set();
  const PauliSet& p = pauli_set();
  for (std::size_t m = 0; m < 4; ++m)
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j) {
        REQUIRE(g.gamma[m](i, j) == cplx{});
        REQUIRE(g.gamma[m](i + 2, j + 2) == cplx{});
        REQUIRE(g.gamma[m](i, j + 2) == p.sigma[m](i, j));
        REQUIRE(g.gamma[m](i + 2, j) == p.sigma_tilde[m](i, j));
      }
}

TEST_CASE("anticommutators equal twice the metric, exactly") {
  const GammaSet& g = gamma_set();
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      const Mat4C anti = g.gamma[i] * g.gamma[j] + g.gamma[j] * g.gamma[i];
      const Mat4C expected =
          cplx(2.0 * minkowski_metric()(i, j), 0.0) * Mat4C::identity();
      REQUIRE(max_abs_diff(anti, expected) == 0.0);
    }
}

TEST_CASE("the sixteen products match the tabulated reference exactly") {
  const GammaSet& g = gamma_set();
  const auto& ref = verify_detail::basis16_reference();
  for (std::size_t b = 0; b < 16; ++b)
    REQUIRE(max_abs_diff(g.basis16[b], ref[b]) == 0.0);
}

TEST_CASE("basis coefficients: unit vectors and roundtrip") {
  const auto c_id = decompose_in_basis16(Mat4C::identity());
  for (std::size_t i = 0; i < 16; ++i)
    REQUIRE(std::abs(c_id[i] - (i == 0 ? cplx(1, 0) : cplx{})) <= 1e-14);

  const auto c_g2 = decompose_in_basis16(gamma_set().gamma[2]);
  for (std::size_t i = 0; i < 16; ++i)
    REQUIRE(std::abs(c_g2[i] - (i == kGammaSlot[2] ? cplx(1, 0) : cplx{})) <=
            1e-14);

  REQUIRE(basis16_gram_det_abs() >= 1e-6);

  SeededRng rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    Mat4C m;
    for (cplx& v : m.data()) v = rng.complex_normal();
    const auto c = decompose_in_basis16(m);
    Mat4C rebuilt;
    for (std::size_t b = 0; b < 16; ++b)
      rebuilt = rebuilt + c[b] * gamma_set().basis16[b];
    REQUIRE(max_abs_diff(rebuilt, m) <= 1e-12);
  }
}

TEST_CASE("real_nullspace finds the kernel of a small system") {
  // x + y = 0, y + z = 0 over R^3: kernel spanned by (1, -1, 1).
  std::vector<double> a{1, 1, 0, 0, 1, 1};
  const auto basis = detail::real_nullspace(std::move(a), 2, 3, 1e-12);
  REQUIRE(basis.size() == 1);
  const auto& v = basis[0];
  REQUIRE(v[0] == Approx(-v[1]));
  REQUIRE(v[2] == Approx(-v[1]));
}

TEST_CASE("the conjugation systems are solved, not transcribed") {
  const GammaSet& g = gamma_set();

  const Mat4C p_span = solve_inversion_equation(spatial_inversion());
  const auto p_coef = decompose_in_basis16(p_span);
  for (std::size_t b = 0; b < 16; ++b)
    if (b != 2) REQUIRE(std::abs(p_coef[b]) <= 1e-9);
  REQUIRE(std::abs(p_coef[2]) >= 0.5);

  const Mat4C t_span = solve_inversion_equation(time_inversion());
  const auto t_coef = decompose_in_basis16(t_span);
  for (std::size_t b = 0; b < 16; ++b)
    if (b != 3) REQUIRE(std::abs(t_coef[b]) <= 1e-9);
  REQUIRE(std::abs(t_coef[3]) >= 0.5);

  // homogeneity: (1 + 2i) gamma_0 solves the parity system
  const cplx c(1.0, 2.0);
  const Mat4C candidate = c * g.gamma[0];
  const Mat4C inv = pin_inverse(candidate);
  for (std::size_t m = 0; m < 4; ++m) {
    Mat4C expected;
    for (std::size_t k = 0; k < 4; ++k)
      expected = expected + cplx(spatial_inversion()(k, m), 0.0) * g.gamma[k];
    REQUIRE(max_abs_diff(candidate * g.gamma[m] * inv, expected) <= 1e-12);
  }
}

TEST_CASE("normalize_inversion orients both solution lines positively") {
  const GammaSet& g = gamma_set();
  const Mat4C p_hat =
      normalize_inversion(solve_inversion_equation(spatial_inversion()), +1);
  REQUIRE(max_abs_diff(p_hat, g.gamma[0]) <= 1e-12);

  const Mat4C t_hat =
      normalize_inversion(solve_inversion_equation(time_inversion()), +1);
  REQUIRE(max_abs_diff(t_hat, g.basis16[3]) <= 1e-12);

  const Mat4C rescaled = normalize_inversion(cplx(0.0, 2.0) * g.gamma[0], +1);
  REQUIRE(max_abs_diff(rescaled, g.gamma[0]) == 0.0);

  const Mat4C negated = normalize_inversion(g.gamma[0], -1);
  REQUIRE(max_abs_diff(negated, -g.gamma[0]) == 0.0);

  // gamma_0 + gamma_1 squares to zero: no normalization exists
  REQUIRE_THROWS_AS(normalize_inversion(g.gamma[0] + g.gamma[1], +1),
                    DomainError);
}

TEST_CASE("the derived generators anticommute and multiply to q_hat") {
  const InversionOps& ops = inversion_ops();
  REQUIRE(max_abs_diff(ops.p_hat * ops.p_hat, Mat4C::identity()) == 0.0);
  REQUIRE(max_abs_diff(ops.t_hat * ops.t_hat, Mat4C::identity()) == 0.0);
  REQUIRE(max_abs(ops.p_hat * ops.t_hat + ops.t_hat * ops.p_hat) == 0.0);
  REQUIRE(max_abs_diff((ops.p_hat * ops.t_hat) * (ops.p_hat * ops.t_hat),
                       -Mat4C::identity()) == 0.0);

  Mat4C q_expected;
  q_expected(0, 0) = cplx(0, 1);
  q_expected(1, 1) = cplx(0, 1);
  q_expected(2, 2) = cplx(0, -1);
  q_expected(3, 3) = cplx(0, -1);
  REQUIRE(max_abs_diff(ops.q_hat, q_expected) == 0.0);
}

TEST_CASE("embed_sl2 produces the block-diagonal representation") {
  const PinElement id = embed_sl2(make_sl2(Mat2C::identity()));
  REQUIRE(max_abs_diff(id.m, Mat4C::identity()) == 0.0);
  REQUIRE(id.sector == SectorTag::Proper);

  Mat2C d;
  d(0, 0) = 2.0;
  d(1, 1) = 0.5;
  const PinElement e = embed_sl2(make_sl2(d));
  Mat4C expected;
  expected(0, 0) = 2.0;
  expected(1, 1) = 0.5;
  expected(2, 2) = 0.5;
  expected(3, 3) = 2.0;
  REQUIRE(max_abs_diff(e.m, expected) == 0.0);

  // conjugation carries gamma_m to the image-weighted combination
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const SL2Element s = sample_sl2(seed);
    const PinElement pe = embed_sl2(s);
    const Mat4C inv = pin_inverse(pe.m, 1e-6);
    const Mat4R img = phi(s);
    for (std::size_t m = 0; m < 4; ++m) {
      Mat4C expected_c;
      for (std::size_t k = 0; k < 4; ++k)
        expected_c = expected_c + cplx(img(k, m), 0.0) * gamma_set().gamma[k];
      REQUIRE(max_abs_diff(pe.m * gamma_set().gamma[m] * inv, expected_c) <=
              1e-9 * std::max(1.0, max_abs(expected_c)));
    }
  }
}

TEST_CASE("big_phi maps the generators onto their inversion matrices") {
  const InversionOps& ops = inversion_ops();

  const LorentzElement from_p = big_phi(ops.p_hat);
  REQUIRE(from_p.tag == SectorTag::PSector);
  REQUIRE(max_abs_diff(from_p.m, spatial_inversion()) == 0.0);

  const LorentzElement from_t = big_phi(ops.t_hat);
  REQUIRE(from_t.tag == SectorTag::TSector);
  REQUIRE(max_abs_diff(from_t.m, time_inversion()) == 0.0);

  const LorentzElement from_q = big_phi(ops.q_hat);
  REQUIRE(from_q.tag == SectorTag::MinusSector);
  REQUIRE(max_abs_diff(from_q.m, -Mat4R::identity()) == 0.0);

  REQUIRE(max_abs_diff(big_phi(Mat4C::identity()).m, Mat4R::identity()) ==
          0.0);
}

TEST_CASE("big_phi rejects matrices outside the representation") {
  Mat4C diag;
  diag(0, 0) = 1.0;
  diag(1, 1) = 2.0;
  diag(2, 2) = 3.0;
  diag(3, 3) = 4.0;
  REQUIRE_THROWS_AS(big_phi(diag), DomainError);

  Mat4C dense;
  for (std::size_t k = 0; k < 16; ++k)
    dense.data()[k] = cplx(static_cast<double>(k + 1), 0.0);
  REQUIRE_THROWS_AS(big_phi(dense), DomainError);

  REQUIRE_THROWS_AS(big_phi(Mat4C{}), DomainError);
}

TEST_CASE("pin products recompute their images consistently") {
  const InversionOps& ops = inversion_ops();
  const PinElement p = make_pin(ops.p_hat);
  const PinElement t = make_pin(ops.t_hat);

  const PinElement pp = pin_mul(p, p);
  REQUIRE(pp.sector == SectorTag::Proper);
  REQUIRE(max_abs_diff(pp.m, Mat4C::identity()) == 0.0);

  const PinElement pt = pin_mul(p, t);
  REQUIRE(pt.sector == SectorTag::MinusSector);
  REQUIRE(max_abs_diff(pt.m, ops.q_hat) == 0.0);

  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const SL2Element a = sample_sl2(4000 + 2 * seed);
    const SL2Element b = sample_sl2(4001 + 2 * seed);
    const PinElement prod = pin_mul(embed_sl2(a), embed_sl2(b), 1e-6);
    const PinElement direct = embed_sl2(make_sl2(a.m * b.m, 1e-6));
    REQUIRE(max_abs_diff(prod.m, direct.m) <= 1e-12);
  }
}

TEST_CASE("preimage inverts the covering map up to sign") {
  const auto kernel = preimage(decompose(Mat4R::identity()));
  REQUIRE(max_abs_diff(kernel.first.m, Mat4C::identity()) == 0.0);
  REQUIRE(max_abs_diff(kernel.second.m, -Mat4C::identity()) == 0.0);

  const auto p_lift = preimage(decompose(spatial_inversion()));
  REQUIRE(max_abs_diff(p_lift.first.m, inversion_ops().p_hat) == 0.0);
  REQUIRE(max_abs_diff(p_lift.second.m, -inversion_ops().p_hat) == 0.0);

  const SectorTag tags[4] = {SectorTag::Proper, SectorTag::PSector,
                             SectorTag::TSector, SectorTag::MinusSector};
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const SectorTag tag = tags[seed % 4];
    const Mat4R proper = phi(sample_sl2(seed));
    const LorentzElement l{sector_factor(tag) * proper, tag, proper};
    const auto lifts = preimage(l);
    REQUIRE(max_abs_diff(lifts.first.image.m, l.m) <= 1e-8);
    REQUIRE(max_abs_diff(lifts.first.m, -lifts.second.m) == 0.0);
  }
}

TEST_CASE("preimage after big_phi returns the element up to sign") {
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    const PinElement p =
        verify_detail::random_pin(verify_detail::tag_of(static_cast<int>(seed)),
                                  9000 + seed);
    const auto lifts = preimage(p.image);
    const double direct = max_abs_diff(lifts.first.m, p.m);
    const double negated = max_abs_diff(lifts.first.m, -p.m);
    REQUIRE(std::min(direct, negated) <= 1e-8);
  }
}

TEST_CASE("the four generator families cover the four sectors") {
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    const PinElement chiral = embed_sl2(sample_sl2(seed));
    REQUIRE(big_phi(chiral.m, 1e-6).tag == SectorTag::Proper);
    for (int sign : {+1, -1}) {
      const cplx s(sign, 0.0);
      REQUIRE(big_phi(s * inversion_ops().p_hat * chiral.m, 1e-6).tag ==
              SectorTag::PSector);
      REQUIRE(big_phi(s * inversion_ops().t_hat * chiral.m, 1e-6).tag ==
              SectorTag::TSector);
      REQUIRE(big_phi(s * inversion_ops().q_hat * chiral.m, 1e-6).tag ==
              SectorTag::MinusSector);
    }
  }
}
