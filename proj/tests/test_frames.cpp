#include <catch2/catch.hpp>

#include "pin13/frames.hpp"
#include "pin13/rng.hpp"
#include "pin13/verify.hpp"

using namespace pin13;

namespace {

Vec4C unit(std::size_t k) {
  Vec4C v{};
  v[k] = cplx(1.0, 0.0);
  return v;
}

Vec4C random_vec(SeededRng& rng) {
  Vec4C v;
  for (cplx& e : v) e = rng.complex_normal();
  return v;
}

// The pairing built from the chiral split: conjugate the second-half
// components of one argument and couple them to the first half of the
// other, plus the conjugated mirror term.
cplx chiral_split_pairing(const Vec4C& x, const Vec4C& y) {
  const cplx first = std::conj(x[2]) * y[0] + std::conj(x[3]) * y[1];
  const cplx second = std::conj(y[2]) * x[0] + std::conj(y[3]) * x[1];
  return first + std::conj(second);
}

}  // namespace

TEST_CASE("field matrices have the stated structure") {
  const Mat4C& d = spin_metric();
  REQUIRE(max_abs_diff(transpose(d), -d) == 0.0);
  REQUIRE(d(0, 1) == cplx(1, 0));
  REQUIRE(d(1, 0) == cplx(-1, 0));
  REQUIRE(d(2, 3) == cplx(-1, 0));
  REQUIRE(d(3, 2) == cplx(1, 0));

  const Mat4C& h = chirality_operator();
  REQUIRE(max_abs_diff(h * h, Mat4C::identity()) == 0.0);
  REQUIRE(trace(h) == cplx{});

  const Mat4C& dd = dirac_form();
  REQUIRE(max_abs_diff(adjoint(dd), dd) == 0.0);
  // D^2 = I with zero trace: spectrum {1, 1, -1, -1}
  REQUIRE(max_abs_diff(dd * dd, Mat4C::identity()) == 0.0);
  REQUIRE(trace(dd) == cplx{});
}

TEST_CASE("the skew pairing on basis vectors") {
  REQUIRE(pair_d(unit(0), unit(1)) == cplx(1, 0));
  REQUIRE(pair_d(unit(2), unit(3)) == cplx(-1, 0));
  SeededRng rng(4);
  for (int i = 0; i < 50; ++i) {
    const Vec4C x = random_vec(rng);
    const Vec4C y = random_vec(rng);
    REQUIRE(std::abs(pair_d(x, y) + pair_d(y, x)) <= 1e-15);
    REQUIRE(std::abs(pair_d(x, x)) <= 1e-15);
  }
}

TEST_CASE("the chirality operator flips the second half") {
  REQUIRE(apply_chirality(unit(0)) == unit(0));
  Vec4C e2 = unit(2);
  Vec4C flipped = apply_chirality(e2);
  REQUIRE(flipped[2] == cplx(-1, 0));
  REQUIRE(apply_chirality(Vec4C{}) == Vec4C{});
  SeededRng rng(6);
  for (int i = 0; i < 20; ++i) {
    const Vec4C x = random_vec(rng);
    REQUIRE(apply_chirality(apply_chirality(x)) == x);
  }
}

TEST_CASE("the Hermitian pairing on basis vectors and its symmetry") {
  REQUIRE(pair_D(unit(0), unit(2)) == cplx(1, 0));
  REQUIRE(pair_D(unit(0), unit(0)) == cplx{});
  Vec4C mixed{cplx(1, 0), cplx{}, cplx(1, 0), cplx{}};
  REQUIRE(pair_D(mixed, mixed) == cplx(2, 0));

  SeededRng rng(5);
  for (int i = 0; i < 50; ++i) {
    const Vec4C x = random_vec(rng);
    const Vec4C y = random_vec(rng);
    REQUIRE(std::abs(pair_D(x, y) - std::conj(pair_D(y, x))) <= 1e-15);
  }
}

TEST_CASE("the matrix pairing reproduces the chiral-split construction") {
  SeededRng rng(7);
  for (int i = 0; i < 100; ++i) {
    const Vec4C x = random_vec(rng);
    const Vec4C y = random_vec(rng);
    // the split form evaluates with its arguments swapped relative to the
    // second-argument-conjugated matrix convention
    REQUIRE(std::abs(chiral_split_pairing(x, y) - pair_D(y, x)) <= 1e-15);
    REQUIRE(std::abs(chiral_split_pairing(x, y) -
                     std::conj(pair_D(x, y))) <= 1e-15);
  }
}

TEST_CASE("basic fields are invariant under chiral transitions") {
  const TransformedFields id = transform_basic_fields(identity_transition());
  REQUIRE(max_abs_diff(id.d, spin_metric()) == 0.0);
  REQUIRE(max_abs_diff(id.h, chirality_operator()) == 0.0);
  REQUIRE(max_abs_diff(id.dirac, dirac_form()) == 0.0);

  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const TransformedFields f =
        transform_basic_fields(transition_from_sl2(sample_sl2(seed)));
    REQUIRE(max_abs_diff(f.d, spin_metric()) <= 1e-9);
    REQUIRE(max_abs_diff(f.h, chirality_operator()) <= 1e-9);
    REQUIRE(max_abs_diff(f.dirac, dirac_form()) <= 1e-9);
  }
}

TEST_CASE("reversal transitions flip the tabulated sign patterns, exactly") {
  const TransformedFields p =
      transform_basic_fields(make_reversed_frame(ReversalKind::Parity));
  REQUIRE(max_abs_diff(p.d, -spin_metric()) == 0.0);
  REQUIRE(max_abs_diff(p.h, -chirality_operator()) == 0.0);
  REQUIRE(max_abs_diff(p.dirac, dirac_form()) == 0.0);

  const TransformedFields t =
      transform_basic_fields(make_reversed_frame(ReversalKind::Time));
  REQUIRE(max_abs_diff(t.d, spin_metric()) == 0.0);
  REQUIRE(max_abs_diff(t.h, -chirality_operator()) == 0.0);
  REQUIRE(max_abs_diff(t.dirac, -dirac_form()) == 0.0);

  const TransformedFields q =
      transform_basic_fields(make_reversed_frame(ReversalKind::ParityTime));
  REQUIRE(max_abs_diff(q.d, -spin_metric()) == 0.0);
  REQUIRE(max_abs_diff(q.h, chirality_operator()) == 0.0);
  REQUIRE(max_abs_diff(q.dirac, -dirac_form()) == 0.0);
}

TEST_CASE("classification of the pure generators") {
  const FrameClassification p =
      classify_frame(transition_from_pin(inversion_ops().p_hat));
  REQUIRE(p.frame_class == FrameClass::PReverseAntiChiral);
  REQUIRE(p.signs == FrameSigns{-1, -1, +1});
  REQUIRE(p.sector == SectorTag::PSector);
  REQUIRE(p.residual == 0.0);

  const FrameClassification t =
      classify_frame(transition_from_pin(inversion_ops().t_hat));
  REQUIRE(t.frame_class == FrameClass::TReverseAntiChiral);
  REQUIRE(t.signs == FrameSigns{+1, -1, -1});

  const FrameClassification q =
      classify_frame(transition_from_pin(inversion_ops().q_hat));
  REQUIRE(q.frame_class == FrameClass::PTReverseChiral);
  REQUIRE(q.signs == FrameSigns{-1, +1, -1});
}

TEST_CASE("classification rejects non-group transitions") {
  Mat4C stretch;
  stretch(0, 0) = 1.0;
  stretch(1, 1) = 2.0;
  stretch(2, 2) = 3.0;
  stretch(3, 3) = 4.0;
  REQUIRE_THROWS_AS(transition_from_pin(stretch), DomainError);

  // scalar multiples conjugate correctly but scale the fields
  const Mat4C doubled = cplx(2.0, 0.0) * Mat4C::identity();
  const FrameTransition f = make_frame_transition(
      doubled, cplx(0.5, 0.0) * Mat4C::identity(), Mat4R::identity(),
      Mat4R::identity());
  REQUIRE_THROWS_AS(classify_frame(f), DomainError);
}

TEST_CASE("classes track the covering sector for every family") {
  struct Expected {
    SectorTag sector;
    FrameClass cls;
    FrameSigns signs;
  };
  const Expected table[4] = {
      {SectorTag::Proper, FrameClass::CanonicalChiral, {+1, +1, +1}},
      {SectorTag::PSector, FrameClass::PReverseAntiChiral, {-1, -1, +1}},
      {SectorTag::TSector, FrameClass::TReverseAntiChiral, {+1, -1, -1}},
      {SectorTag::MinusSector, FrameClass::PTReverseChiral, {-1, +1, -1}}};
  for (const Expected& row : table)
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
      const PinElement p = verify_detail::random_pin(row.sector, 1200 + seed);
      const FrameClassification c =
          classify_frame(transition_from_pin(p.m, 1e-6), 1e-6);
      REQUIRE(c.frame_class == row.cls);
      REQUIRE(c.signs == row.signs);
      REQUIRE(c.sector == row.sector);
    }
}

TEST_CASE("canonical classification is equivalent to all three invariances") {
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    const PinElement p = verify_detail::random_pin(
        verify_detail::tag_of(static_cast<int>(seed)), 2200 + seed);
    const FrameTransition f = transition_from_pin(p.m, 1e-6);
    const TransformedFields fields = transform_basic_fields(f);
    const double tol = 1e-6 * std::max(1.0, max_abs(fields.d));
    const bool d_fixed = approx_eq(fields.d, spin_metric(), tol);
    const bool h_fixed = approx_eq(fields.h, chirality_operator(), tol);
    const bool dd_fixed = approx_eq(fields.dirac, dirac_form(), tol);
    const bool canonical = classify_frame(f, 1e-6).frame_class ==
                           FrameClass::CanonicalChiral;
    REQUIRE(canonical == (d_fixed && h_fixed && dd_fixed));
  }
}

TEST_CASE("reversed frames send the basis where the construction says") {
  // columns of the spinor matrix are the images of the basis vectors
  const FrameTransition p = make_reversed_frame(ReversalKind::Parity);
  REQUIRE(p.s_hat(2, 0) == cplx(1, 0));  // first -> third
  REQUIRE(p.s_hat(3, 1) == cplx(1, 0));
  REQUIRE(p.s_hat(0, 2) == cplx(1, 0));
  REQUIRE(p.s_hat(1, 3) == cplx(1, 0));

  const FrameTransition t = make_reversed_frame(ReversalKind::Time);
  REQUIRE(t.s_hat(2, 0) == cplx(0, 1));   // i * third
  REQUIRE(t.s_hat(3, 1) == cplx(0, 1));
  REQUIRE(t.s_hat(0, 2) == cplx(0, -1));  // -i * first
  REQUIRE(t.s_hat(1, 3) == cplx(0, -1));

  const FrameTransition q = make_reversed_frame(ReversalKind::ParityTime);
  REQUIRE(q.s_hat(0, 0) == cplx(0, 1));
  REQUIRE(q.s_hat(1, 1) == cplx(0, 1));
  REQUIRE(q.s_hat(2, 2) == cplx(0, -1));
  REQUIRE(q.s_hat(3, 3) == cplx(0, -1));

  // the Lorentz parts pair up as stated
  REQUIRE(max_abs_diff(p.s, spatial_inversion()) == 0.0);
  REQUIRE(max_abs_diff(t.s, time_inversion()) == 0.0);
  REQUIRE(max_abs_diff(q.s, -Mat4R::identity()) == 0.0);
}

TEST_CASE("the spin metric as a component array matches its matrix") {
  const SpinTensor d = spin_metric_tensor();
  REQUIRE(d.type == make_tensor_type(0, 2, 0, 0, 0, 0));
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      REQUIRE(d.data[i * 4 + j] == spin_metric()(i, j));
}
