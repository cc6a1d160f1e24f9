#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include "pin13/dirac.hpp"
#include "pin13/frames.hpp"
#include "pin13/json_io.hpp"
#include "pin13/lorentz.hpp"
#include "pin13/matrix.hpp"
#include "pin13/rng.hpp"
#include "pin13/sl2c.hpp"
#include "pin13/spintensor.hpp"

namespace pin13 {

struct CheckResult {
  std::string name;
  std::string property;
  bool pass = false;
  double max_residual = 0.0;
  long samples = 0;
  double seconds = 0.0;
};

struct SuiteConfig {
  std::uint64_t seed = 42;
  long samples = 100;   // per-check sample count
  double tol = kEpsFloat;
  bool acceptance_counts = false;  // use the per-criterion mandated counts
};

namespace verify_detail {

inline long count(const SuiteConfig& cfg, long acceptance_n) {
  return cfg.acceptance_counts ? acceptance_n : std::max(1l, cfg.samples);
}

// Disjoint seed blocks per check keep the sampled streams independent of
// suite ordering.
inline std::uint64_t block_seed(const SuiteConfig& cfg, std::uint64_t check) {
  return cfg.seed * 1000000ull + check * 50000ull;
}

// The sixteen independent gamma products as tabulated reference data,
// encoded entrywise with tokens 0, 1, -1, i, -i.  This table is the frozen
// comparison target for the constructed products.
inline const std::array<Mat4C, 16>& basis16_reference() {
  static const std::array<Mat4C, 16> ref = [] {
    constexpr const char* kRows[16] = {
        "1 0 0 0  0 1 0 0  0 0 1 0  0 0 0 1",
        "i 0 0 0  0 i 0 0  0 0 -i 0  0 0 0 -i",
        "0 0 1 0  0 0 0 1  1 0 0 0  0 1 0 0",
        "0 0 -i 0  0 0 0 -i  i 0 0 0  0 i 0 0",
        "0 0 0 1  0 0 1 0  0 -1 0 0  -1 0 0 0",
        "0 0 0 -i  0 0 -i 0  0 -i 0 0  -i 0 0 0",
        "0 0 0 -i  0 0 i 0  0 i 0 0  -i 0 0 0",
        "0 0 0 1  0 0 -1 0  0 1 0 0  -1 0 0 0",
        "0 0 1 0  0 0 0 -1  -1 0 0 0  0 1 0 0",
        "0 0 -i 0  0 0 0 i  -i 0 0 0  0 i 0 0",
        "0 -1 0 0  -1 0 0 0  0 0 0 1  0 0 1 0",
        "0 -i 0 0  -i 0 0 0  0 0 0 -i  0 0 -i 0",
        "0 i 0 0  -i 0 0 0  0 0 0 -i  0 0 i 0",
        "0 1 0 0  -1 0 0 0  0 0 0 1  0 0 -1 0",
        "-1 0 0 0  0 1 0 0  0 0 1 0  0 0 0 -1",
        "-i 0 0 0  0 i 0 0  0 0 -i 0  0 0 0 i"};
    std::array<Mat4C, 16> out{};
    for (std::size_t b = 0; b < 16; ++b) {
      std::istringstream in(kRows[b]);
      std::string token;
      for (std::size_t k = 0; k < 16; ++k) {
        in >> token;
        cplx v;
        if (token == "0") v = cplx(0, 0);
        else if (token == "1") v = cplx(1, 0);
        else if (token == "-1") v = cplx(-1, 0);
        else if (token == "i") v = cplx(0, 1);
        else if (token == "-i") v = cplx(0, -1);
        else throw InternalError("basis16_reference: bad token");
        out[b].data()[k] = v;
      }
    }
    return out;
  }();
  return ref;
}

// Haar-ish SU(2) sample from a normalized quaternion; all entries have
// modulus at most 1, which keeps the brute-force contraction comparison in
// exact-adjacent territory.
inline SL2Element sample_su2(std::uint64_t seed) {
  SeededRng rng(seed);
  double q[4];
  double norm2 = 0.0;
  do {
    norm2 = 0.0;
    for (double& v : q) {
      v = rng.normal();
      norm2 += v * v;
    }
  } while (norm2 < 1e-8);
  const double inv = 1.0 / std::sqrt(norm2);
  for (double& v : q) v *= inv;
  Mat2C u;
  u(0, 0) = cplx(q[0], -q[3]);
  u(0, 1) = cplx(-q[2], -q[1]);
  u(1, 0) = cplx(q[2], -q[1]);
  u(1, 1) = cplx(q[0], q[3]);
  return SL2Element{u};
}

// Brute-force evaluation of the forward transformation rule: for every
// output tuple, sum the fully expanded coefficient product over every
// source tuple.  Written directly against the group counts so it shares no
// machinery with the axis-by-axis engine.
inline SpinTensor naive_transform(const SpinTensor& x,
                                  const FrameTransition& f) {
  const SpinTensorType& t = x.type;
  const int counts[6] = {t.alpha, t.beta, t.nu, t.gamma_b, t.m, t.n};
  const int total = t.total();
  const Mat4C t_hat_conj = conj_mat(f.t_hat);
  const Mat4C s_hat_conj = conj_mat(f.s_hat);

  SpinTensor out = make_spin_tensor(t);
  std::vector<int> out_idx(static_cast<std::size_t>(total), 0);
  std::vector<int> src_idx(static_cast<std::size_t>(total), 0);

  const auto coefficient = [&](int axis, int o, int a) -> cplx {
    int g = 0, off = axis;
    while (off >= counts[g]) {
      off -= counts[g];
      ++g;
    }
    switch (g) {
      case 0: return f.t_hat(o, a);
      case 1: return f.s_hat(a, o);
      case 2: return t_hat_conj(o, a);
      case 3: return s_hat_conj(a, o);
      case 4: return cplx(f.t(o, a), 0.0);
      default: return cplx(f.s(a, o), 0.0);
    }
  };

  const std::size_t n_components = component_count(t);
  for (std::size_t lin_out = 0; lin_out < n_components; ++lin_out) {
    std::size_t rest = lin_out;
    for (int k = total - 1; k >= 0; --k) {
      out_idx[static_cast<std::size_t>(k)] = static_cast<int>(rest & 3);
      rest >>= 2;
    }
    cplx acc{};
    for (std::size_t lin_src = 0; lin_src < n_components; ++lin_src) {
      rest = lin_src;
      for (int k = total - 1; k >= 0; --k) {
        src_idx[static_cast<std::size_t>(k)] = static_cast<int>(rest & 3);
        rest >>= 2;
      }
      cplx prod(1.0, 0.0);
      for (int axis = 0; axis < total; ++axis)
        prod *= coefficient(axis, out_idx[static_cast<std::size_t>(axis)],
                            src_idx[static_cast<std::size_t>(axis)]);
      acc += prod * x.data[lin_src];
    }
    out.data[lin_out] = acc;
  }
  return out;
}

inline double tensor_max_diff(const SpinTensor& a, const SpinTensor& b) {
  double worst = 0.0;
  for (std::size_t k = 0; k < a.data.size(); ++k)
    worst = std::max(worst, std::abs(a.data[k] - b.data[k]));
  return worst;
}

inline SpinTensor random_tensor(const SpinTensorType& type, SeededRng& rng) {
  SpinTensor x = make_spin_tensor(type);
  for (cplx& v : x.data) v = rng.complex_normal();
  return x;
}

inline SectorTag tag_of(int k) {
  switch (k & 3) {
    case 0: return SectorTag::Proper;
    case 1: return SectorTag::PSector;
    case 2: return SectorTag::TSector;
    default: return SectorTag::MinusSector;
  }
}

inline PinElement random_pin(SectorTag tag, std::uint64_t seed) {
  const PinElement chiral = embed_sl2(sample_sl2(seed));
  if (tag == SectorTag::Proper) return chiral;
  return make_pin(sector_hat_factor(tag) * chiral.m);
}

template <typename Body>
CheckResult timed_check(std::string name, std::string property, long samples,
                        Body&& body) {
  CheckResult r;
  r.name = std::move(name);
  r.property = std::move(property);
  r.samples = samples;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(r);
  } catch (const std::exception& e) {
    r.pass = false;
    r.max_residual = -1.0;
    r.property += std::string(" [aborted: ") + e.what() + "]";
  }
  r.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  return r;
}

}  // namespace verify_detail

// --- individual checks ----------------------------------------------------

inline CheckResult check_phi_homomorphism(const SuiteConfig& cfg) {
  namespace vd = verify_detail;
  const long n = vd::count(cfg, 1000);
  return vd::timed_check(
      "phi_homomorphism",
      "phi(A*B) == phi(A)*phi(B); images satisfy S^T g S = g, det S = 1, "
      "S(0,0) >= 1",
      n, [&](CheckResult& r) {
        const std::uint64_t base = vd::block_seed(cfg, 1);
        double worst = 0.0;
        for (long i = 0; i < n; ++i) {
          const SL2Element s1 = sample_sl2(base + 2 * static_cast<std::uint64_t>(i));
          const SL2Element s2 =
              sample_sl2(base + 2 * static_cast<std::uint64_t>(i) + 1);
          const SL2Element prod = make_sl2(s1.m * s2.m, 1e-6);
          const Mat4R lhs = phi(prod, 1e-6);
          const Mat4R rhs = phi(s1) * phi(s2);
          worst = std::max(worst, max_abs_diff(lhs, rhs));

          const Mat4R img = phi(s1);
          worst = std::max(worst, metric_residual(img));
          worst = std::max(worst, std::abs(det(img) - 1.0));
          worst = std::max(worst, std::max(0.0, 1.0 - img(0, 0)));
        }
        r.max_residual = worst;
        r.pass = worst <= cfg.tol;
      });
}

inline CheckResult check_phi_pauli_crosscheck(const SuiteConfig& cfg) {
  namespace vd = verify_detail;
  const long n = vd::count(cfg, 500);
  return vd::timed_check(
      "phi_pauli_crosscheck",
      "component formulas agree with sigma-basis extraction of A sigma_m "
      "A^dagger",
      n, [&](CheckResult& r) {
        const std::uint64_t base = vd::block_seed(cfg, 2);
        double worst = 0.0;
        for (long i = 0; i < n; ++i) {
          const SL2Element s = sample_sl2(base + static_cast<std::uint64_t>(i));
          worst = std::max(worst, max_abs_diff(phi(s), phi_via_sigma(s)));
        }
        r.max_residual = worst;
        r.pass = worst <= cfg.tol;
      });
}

inline CheckResult check_sigma_dual_transform(const SuiteConfig& cfg) {
  namespace vd = verify_detail;
  const long n = vd::count(cfg, 500);
  return vd::timed_check(
      "sigma_dual_transform",
      "(A^-1)^dagger sigma~_m A^-1 == sum_k phi(A)^k_m sigma~_k; "
      "sigma~_m sigma_m == eps_m I exactly",
      n, [&](CheckResult& r) {
        const PauliSet& p = pauli_set();
        double exact = 0.0;
        for (std::size_t m = 0; m < 4; ++m) {
          exact = std::max(
              exact, max_abs_diff(p.sigma_tilde[m] * p.sigma[m],
                                  cplx(p.epsilon[m], 0.0) * Mat2C::identity()));
          exact = std::max(exact,
                           max_abs_diff(p.sigma_tilde[m], l_map(p.sigma[m])));
        }
        const std::uint64_t base = vd::block_seed(cfg, 3);
        double worst = 0.0;
        for (long i = 0; i < n; ++i)
          worst = std::max(worst, sigma_dual_residual(sample_sl2(
                                      base + static_cast<std::uint64_t>(i))));
        r.max_residual = std::max(exact, worst);
        r.pass = exact == 0.0 && worst <= cfg.tol;
      });
}

inline CheckResult check_clifford_anticommutation(const SuiteConfig& cfg) {
  namespace vd = verify_detail;
  (void)cfg;
  return vd::timed_check(
      "clifford_anticommutation",
      "gamma_i gamma_j + gamma_j gamma_i == 2 g_ij I and all sixteen "
      "products match their tabulated matrices, exactly",
      16, [&](CheckResult& r) {
        const GammaSet& g = gamma_set();
        const Mat4R& metric = minkowski_metric();
        double worst = 0.0;
        for (std::size_t i = 0; i < 4; ++i)
          for (std::size_t j = 0; j < 4; ++j) {
            const Mat4C anti =
                g.gamma[i] * g.gamma[j] + g.gamma[j] * g.gamma[i];
            worst = std::max(
                worst, max_abs_diff(anti, cplx(2.0 * metric(i, j), 0.0) *
                                              Mat4C::identity()));
          }
        const auto& ref = vd::basis16_reference();
        for (std::size_t b = 0; b < 16; ++b)
          worst = std::max(worst, max_abs_diff(g.basis16[b], ref[b]));
        r.max_residual = worst;
        r.pass = worst == 0.0;
      });
}

inline CheckResult check_gamma_basis_completeness(const SuiteConfig& cfg) {
  namespace vd = verify_detail;
  const long n = vd::count(cfg, 100);
  return vd::timed_check(
      "gamma_basis_completeness",
      "Gram determinant of the sixteen products stays away from 0; "
      "coefficient roundtrip reproduces random matrices to 1e-12",
      n, [&](CheckResult& r) {
        const bool rank_ok = basis16_gram_det_abs() >= 1e-6;
        const GammaSet& g = gamma_set();
        SeededRng rng(vd::block_seed(cfg, 5));
        double worst = 0.0;
        for (long i = 0; i < n; ++i) {
          Mat4C m;
          for (cplx& v : m.data()) v = rng.complex_normal();
          const std::array<cplx, 16> c = decompose_in_basis16(m);
          Mat4C rebuilt;
          for (std::size_t b = 0; b < 16; ++b)
            rebuilt = rebuilt + c[b] * g.basis16[b];
          worst = std::max(worst, max_abs_diff(rebuilt, m));
        }
        r.max_residual = worst;
        r.pass = rank_ok && worst <= 1e-12;
      });
}

inline CheckResult check_inversion_nullspace(const SuiteConfig& cfg) {
  namespace vd = verify_detail;
  return vd::timed_check(
      "inversion_nullspace",
      "the spatial/time conjugation systems have one-dimensional solution "
      "lines spanned by gamma_0 and gamma_1 gamma_2 gamma_3",
      2, [&](CheckResult& r) {
        const GammaSet& g = gamma_set();
        double worst = 0.0;

        const auto line_residual = [&](const Mat4R& target,
                                       std::size_t slot) -> double {
          const Mat4C span = solve_inversion_equation(target);
          const std::array<cplx, 16> c = decompose_in_basis16(span);
          double off = 0.0;
          for (std::size_t b = 0; b < 16; ++b)
            if (b != slot) off = std::max(off, std::abs(c[b]));
          // The span must also solve the system it came from.
          double sys = 0.0;
          const Mat4C inv_span = pin_inverse(span);
          for (std::size_t m = 0; m < 4; ++m) {
            Mat4C expect;
            for (std::size_t k = 0; k < 4; ++k)
              expect = expect + cplx(target(k, m), 0.0) * g.gamma[k];
            sys = std::max(sys, max_abs_diff(span * g.gamma[m] * inv_span,
                                             expect));
          }
          return std::max(off, sys);
        };

        worst = std::max(worst, line_residual(spatial_inversion(), 2));
        worst = std::max(worst, line_residual(time_inversion(), 3));

        // Homogeneity: any complex multiple of the line solves the system.
        const cplx c(1.0, 2.0);
        const Mat4C scaled = c * g.basis16[2];
        const Mat4C scaled_inv = pin_inverse(scaled);
        for (std::size_t m = 0; m < 4; ++m) {
          Mat4C expect;
          for (std::size_t k = 0; k < 4; ++k)
            expect =
                expect + cplx(spatial_inversion()(k, m), 0.0) * g.gamma[k];
          worst = std::max(
              worst, max_abs_diff(scaled * g.gamma[m] * scaled_inv, expect));
        }

        r.max_residual = worst;
        r.pass = worst <= cfg.tol;
      });
}

inline CheckResult check_inversion_relations(const SuiteConfig& cfg) {
  namespace vd = verify_detail;
  (void)cfg;
  return vd::timed_check(
      "inversion_relations",
      "Phat That + That Phat == 0 and (Phat That)^2 == -I, exactly, for "
      "every sign choice of the two generators",
      4, [&](CheckResult& r) {
        const GammaSet& g = gamma_set();
        double worst = 0.0;
        for (int sp : {+1, -1})
          for (int st : {+1, -1}) {
            const Mat4C p = cplx(sp, 0.0) * g.basis16[2];
            const Mat4C t = cplx(st, 0.0) * g.basis16[3];
            worst = std::max(worst, max_abs(p * t + t * p));
            worst = std::max(
                worst, max_abs_diff((p * t) * (p * t), -Mat4C::identity()));
          }
        r.max_residual = worst;
        r.pass = worst == 0.0;
      });
}

inline CheckResult check_pin_homomorphism(const SuiteConfig& cfg) {
  namespace vd = verify_detail;
  const long n = vd::count(cfg, 1000);
  return vd::timed_check(
      "pin_homomorphism",
      "Phi(a*b) == Phi(a)*Phi(b) across all four sectors; Phi(-m) == Phi(m) "
      "exactly; the kernel is {+I, -I}",
      n, [&](CheckResult& r) {
        const std::uint64_t base = vd::block_seed(cfg, 8);
        double worst = 0.0;
        double exact = 0.0;
        bool sectors_ok = true;
        for (long i = 0; i < n; ++i) {
          const SectorTag ta = vd::tag_of(static_cast<int>(i));
          const SectorTag tb = vd::tag_of(static_cast<int>(i / 4));
          const PinElement a =
              vd::random_pin(ta, base + 2 * static_cast<std::uint64_t>(i));
          const PinElement b =
              vd::random_pin(tb, base + 2 * static_cast<std::uint64_t>(i) + 1);
          const PinElement ab = pin_mul(a, b, 1e-6);
          worst = std::max(worst,
                           max_abs_diff(ab.image.m, a.image.m * b.image.m));
          sectors_ok =
              sectors_ok && ab.sector == sector_mul(a.sector, b.sector);
          if (i % 10 == 0)
            exact = std::max(
                exact, max_abs_diff(big_phi(-a.m, 1e-6).m, big_phi(a.m, 1e-6).m));
        }
        exact = std::max(
            exact, max_abs_diff(big_phi(-Mat4C::identity()).m,
                                Mat4R::identity()));
        const auto kernel = preimage(decompose(Mat4R::identity()));
        exact = std::max(exact, max_abs_diff(kernel.first.m,
                                             Mat4C::identity()));
        exact = std::max(exact, max_abs_diff(kernel.second.m,
                                             -Mat4C::identity()));
        r.max_residual = std::max(worst, exact);
        r.pass = worst <= cfg.tol && exact == 0.0 && sectors_ok;
      });
}

inline CheckResult check_conjugation_diagram(const SuiteConfig& cfg) {
  namespace vd = verify_detail;
  const long n = vd::count(cfg, 500);
  return vd::timed_check(
      "conjugation_diagram",
      "phi((A^-1)^dagger) == P phi(A) P", n, [&](CheckResult& r) {
        const std::uint64_t base = vd::block_seed(cfg, 9);
        double worst = 0.0;
        for (long i = 0; i < n; ++i) {
          const SL2Element s = sample_sl2(base + static_cast<std::uint64_t>(i));
          worst = std::max(
              worst, max_abs_diff(phi(psi_prime(s), 1e-6), psi(phi(s))));
        }
        r.max_residual = worst;
        r.pass = worst <= cfg.tol;
      });
}

inline CheckResult check_sector_multiplication_table(const SuiteConfig& cfg) {
  namespace vd = verify_detail;
  const long per_cell = vd::count(cfg, 200);
  return vd::timed_check(
      "sector_multiplication_table",
      "tagged products reproduce the four-sector reduction table, with the "
      "parity-conjugated proper part",
      16 * per_cell, [&](CheckResult& r) {
        const std::uint64_t base = vd::block_seed(cfg, 10);
        double worst = 0.0;
        bool tags_ok = true;
        std::uint64_t draw = 0;
        const SectorTag tags[4] = {SectorTag::Proper, SectorTag::PSector,
                                   SectorTag::TSector, SectorTag::MinusSector};
        for (const SectorTag row : tags)
          for (const SectorTag col : tags)
            for (long j = 0; j < per_cell; ++j) {
              const Mat4R s1 = phi(sample_sl2(base + draw++));
              const Mat4R s2 = phi(sample_sl2(base + draw++));
              const LorentzElement a{sector_factor(row) * s1, row, s1};
              const LorentzElement b{sector_factor(col) * s2, col, s2};
              const LorentzElement ab = mul(a, b);

              const SectorTag expected_tag = sector_mul(row, col);
              // Moving a parity or time factor of the right operand past
              // the left proper part conjugates it.
              const bool col_flip =
                  col == SectorTag::PSector || col == SectorTag::TSector;
              const Mat4R expected_proper = (col_flip ? psi(s1) : s1) * s2;
              const Mat4R expected_m =
                  sector_factor(expected_tag) * expected_proper;

              worst = std::max(worst, max_abs_diff(ab.m, expected_m));
              worst = std::max(worst,
                               max_abs_diff(ab.proper_part, expected_proper));
              tags_ok = tags_ok && ab.tag == expected_tag;
            }
        r.max_residual = worst;
        r.pass = worst <= cfg.tol && tags_ok;
      });
}

inline CheckResult check_preimage_lift(const SuiteConfig& cfg) {
  namespace vd = verify_detail;
  const long n = vd::count(cfg, 1000);
  return vd::timed_check(
      "preimage_lift",
      "Phi(preimage(L)) == L on all four sectors; the two lifts are exact "
      "negatives",
      n, [&](CheckResult& r) {
        const std::uint64_t base = vd::block_seed(cfg, 11);
        double worst = 0.0;
        double exact = 0.0;
        for (long i = 0; i < n; ++i) {
          const SectorTag tag = vd::tag_of(static_cast<int>(i));
          const Mat4R proper =
              phi(sample_sl2(base + static_cast<std::uint64_t>(i)));
          const LorentzElement l{sector_factor(tag) * proper, tag, proper};
          const auto lifts = preimage(l);
          worst = std::max(worst, max_abs_diff(lifts.first.image.m, l.m));
          exact = std::max(exact,
                           max_abs_diff(lifts.first.m, -lifts.second.m));
        }
        r.max_residual = std::max(worst, exact);
        r.pass = worst <= 1e-8 && exact == 0.0;
      });
}

inline CheckResult check_spintensor_engine(const SuiteConfig& cfg) {
  namespace vd = verify_detail;
  const long n = vd::count(cfg, 100);
  return vd::timed_check(
      "spintensor_engine",
      "forward and inverse transforms invert each other; the engine matches "
      "a nested-loop contraction; tau is an exact involution",
      n, [&](CheckResult& r) {
        const std::uint64_t base = vd::block_seed(cfg, 12);
        SeededRng rng(base);
        double roundtrip = 0.0;
        for (long i = 0; i < n; ++i) {
          const int bits = static_cast<int>(i) % 64;
          const SpinTensorType type = make_tensor_type(
              bits & 1, (bits >> 1) & 1, (bits >> 2) & 1, (bits >> 3) & 1,
              (bits >> 4) & 1, (bits >> 5) & 1);
          const SpinTensor x = vd::random_tensor(type, rng);
          const FrameTransition f = transition_from_pin(
              vd::random_pin(vd::tag_of(static_cast<int>(i)),
                             base + 100 + static_cast<std::uint64_t>(i))
                  .m,
              1e-6);
          roundtrip = std::max(
              roundtrip,
              vd::tensor_max_diff(inverse_transform(transform(x, f), f), x));
        }

        // Oracle agreement at 1e-12 uses unit-modulus transitions (rotation
        // and reversal families), which keep both summation orders within
        // brute-force rounding of each other.
        double oracle = 0.0;
        const long oracle_n = std::min<long>(n, 24);
        for (long i = 0; i < oracle_n; ++i) {
          const SpinTensorType type =
              i % 12 == 0 ? make_tensor_type(1, 1, 1, 1, 1, 1)
                          : make_tensor_type(i % 2, (i / 2) % 2, (i / 4) % 2,
                                             (i / 8) % 2, i % 2, (i + 1) % 2);
          const SpinTensor x = vd::random_tensor(type, rng);
          const FrameTransition chiral = transition_from_sl2(
              vd::sample_su2(base + 7000 + static_cast<std::uint64_t>(i)));
          FrameTransition f = chiral;
          if (i % 4 == 1)
            f = compose(make_reversed_frame(ReversalKind::Parity), chiral);
          if (i % 4 == 2)
            f = compose(make_reversed_frame(ReversalKind::Time), chiral);
          if (i % 4 == 3)
            f = compose(make_reversed_frame(ReversalKind::ParityTime), chiral);
          oracle = std::max(
              oracle, vd::tensor_max_diff(transform(x, f),
                                          vd::naive_transform(x, f)));
        }

        double involution = 0.0;
        for (long i = 0; i < std::min<long>(n, 100); ++i) {
          const int bits = static_cast<int>(i * 7 + 3) % 64;
          const SpinTensorType type = make_tensor_type(
              bits & 1, (bits >> 1) & 1, (bits >> 2) & 1, (bits >> 3) & 1,
              (bits >> 4) & 1, (bits >> 5) & 1);
          const SpinTensor x = vd::random_tensor(type, rng);
          involution =
              std::max(involution, tau(tau(x)) == x ? 0.0 : 1.0);
        }

        r.max_residual = std::max({roundtrip, oracle, involution});
        r.pass = roundtrip <= cfg.tol && oracle <= 1e-12 && involution == 0.0;
      });
}

inline CheckResult check_gamma_symbol_invariance(const SuiteConfig& cfg) {
  namespace vd = verify_detail;
  const long n = vd::count(cfg, 200);
  return vd::timed_check(
      "gamma_symbol_invariance",
      "gamma symbols are invariant components: exactly for the reversal "
      "generators, to tolerance for random chiral transitions",
      n, [&](CheckResult& r) {
        double exact = 0.0;
        exact = std::max(exact,
                         gamma_symbol_invariance(identity_transition(), +1));
        exact = std::max(
            exact, gamma_symbol_invariance(
                       make_reversed_frame(ReversalKind::Parity), +1));
        exact = std::max(exact,
                         gamma_symbol_invariance(
                             make_reversed_frame(ReversalKind::Time), +1));
        exact = std::max(
            exact, gamma_symbol_invariance(
                       make_reversed_frame(ReversalKind::ParityTime), -1));

        const SpinTensor symbols = gamma_symbol_tensor();
        for (const ReversalKind k :
             {ReversalKind::Parity, ReversalKind::Time,
              ReversalKind::ParityTime})
          exact = std::max(
              exact, vd::tensor_max_diff(
                         transform(symbols, make_reversed_frame(k)), symbols));

        const std::uint64_t base = vd::block_seed(cfg, 13);
        double chiral = 0.0;
        for (long i = 0; i < n; ++i) {
          const FrameTransition f = transition_from_sl2(
              sample_sl2(base + static_cast<std::uint64_t>(i)));
          chiral = std::max(chiral, gamma_symbol_invariance(f, +1, 1e-6));
          chiral = std::max(
              chiral, vd::tensor_max_diff(transform(symbols, f), symbols));
        }
        r.max_residual = std::max(exact, chiral);
        r.pass = exact == 0.0 && chiral <= cfg.tol;
      });
}

inline CheckResult check_frame_classification(const SuiteConfig& cfg) {
  namespace vd = verify_detail;
  const long per_family = vd::count(cfg, 200);
  return vd::timed_check(
      "frame_classification",
      "the (d, H, D) sign signatures match the four-class table and the "
      "covering sector in every case",
      4 * per_family, [&](CheckResult& r) {
        const std::uint64_t base = vd::block_seed(cfg, 14);
        struct Expected {
          SectorTag sector;
          FrameClass cls;
          FrameSigns signs;
        };
        const Expected table[4] = {
            {SectorTag::Proper, FrameClass::CanonicalChiral, {+1, +1, +1}},
            {SectorTag::PSector, FrameClass::PReverseAntiChiral, {-1, -1, +1}},
            {SectorTag::TSector, FrameClass::TReverseAntiChiral, {+1, -1, -1}},
            {SectorTag::MinusSector,
             FrameClass::PTReverseChiral,
             {-1, +1, -1}}};
        double worst = 0.0;
        bool ok = true;
        std::uint64_t draw = 0;
        for (const Expected& row : table)
          for (long j = 0; j < per_family; ++j) {
            const PinElement p = vd::random_pin(row.sector, base + draw++);
            const FrameClassification c =
                classify_frame(transition_from_pin(p.m, 1e-6), 1e-6);
            ok = ok && c.frame_class == row.cls && c.signs == row.signs &&
                 c.sector == row.sector;
            worst = std::max(worst, c.residual);
          }
        r.max_residual = worst;
        r.pass = ok && worst <= cfg.tol;
      });
}

inline json report_json(const SuiteConfig& cfg,
                        const std::vector<CheckResult>& results) {
  json checks = json::array();
  bool all = true;
  for (const CheckResult& r : results) {
    checks.push_back(json{{"name", r.name},
                          {"property", r.property},
                          {"pass", r.pass},
                          {"max_residual", r.max_residual},
                          {"samples", r.samples}});
    all = all && r.pass;
  }
  return json{{"seed", cfg.seed},
              {"samples", cfg.samples},
              {"tolerance", cfg.tol},
              {"checks", checks},
              {"all_pass", all}};
}

inline CheckResult check_cli_contract(const SuiteConfig& cfg,
                                      const std::vector<CheckResult>& prior) {
  namespace vd = verify_detail;
  return vd::timed_check(
      "cli_contract",
      "classify(gamma_0) == PReverseAntiChiral; report serialization is "
      "deterministic",
      1, [&](CheckResult& r) {
        const FrameClassification c =
            classify_frame(transition_from_pin(inversion_ops().p_hat));
        const bool classify_ok =
            c.frame_class == FrameClass::PReverseAntiChiral &&
            c.sector == SectorTag::PSector &&
            c.signs == FrameSigns{-1, -1, +1};
        const std::string once = report_json(cfg, prior).dump(2);
        const std::string twice = report_json(cfg, prior).dump(2);
        r.max_residual = c.residual;
        r.pass = classify_ok && once == twice;
      });
}

inline std::vector<CheckResult> run_suite(const SuiteConfig& cfg) {
  std::vector<CheckResult> results;
  results.push_back(check_phi_homomorphism(cfg));
  results.push_back(check_phi_pauli_crosscheck(cfg));
  results.push_back(check_sigma_dual_transform(cfg));
  results.push_back(check_clifford_anticommutation(cfg));
  results.push_back(check_gamma_basis_completeness(cfg));
  results.push_back(check_inversion_nullspace(cfg));
  results.push_back(check_inversion_relations(cfg));
  results.push_back(check_pin_homomorphism(cfg));
  results.push_back(check_conjugation_diagram(cfg));
  results.push_back(check_sector_multiplication_table(cfg));
  results.push_back(check_preimage_lift(cfg));
  results.push_back(check_spintensor_engine(cfg));
  results.push_back(check_gamma_symbol_invariance(cfg));
  results.push_back(check_frame_classification(cfg));
  results.push_back(check_cli_contract(cfg, results));
  return results;
}

inline bool all_pass(const std::vector<CheckResult>& results) {
  for (const CheckResult& r : results)
    if (!r.pass) return false;
  return true;
}

}  // namespace pin13
